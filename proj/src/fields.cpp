#include "nonstatic/fields.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nonstatic/error.hpp"

namespace nonstatic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

FieldParams validate(const FieldParams& fp) {
    if (!(fp.alpha0 >= 0.0) || !std::isfinite(fp.alpha0))
        throw Error(ErrorCode::InvalidArgument, "alpha0 must be >= 0");
    if (!(fp.k > 0.0) || !std::isfinite(fp.k))
        throw Error(ErrorCode::InvalidArgument, "k must be > 0");
    if (!(fp.volume > 0.0) || !std::isfinite(fp.volume))
        throw Error(ErrorCode::InvalidArgument, "volume must be > 0");
    if (!std::isfinite(fp.theta)) throw Error(ErrorCode::InvalidArgument, "theta must be finite");
    return fp;
}

double atan_xy(double x, double y) {
    if (x == 0.0 && y == 0.0) throw Error(ErrorCode::UndefinedAngle, "atan_xy(0, 0)");
    double mu = std::atan2(y, x);
    if (mu < 0.0) mu += kTwoPi;
    // -0.0 from atan2, or a tiny negative angle that rounds up to 2 pi
    if (mu == 0.0 || mu >= kTwoPi) mu = 0.0;
    return mu;
}

std::complex<double> coherent_eigenvalue(const ModeParams& params, const FieldParams& fp, double t) {
    return std::polar(fp.alpha0, -(eval_theta(params, t) + fp.theta));
}

FieldSample field_sample(double x, double t, const ModeParams& params,
                         const QuantumConstants& consts, const FieldParams& fp) {
    const TimeSample s = sample(params, t);
    const double bigA =
        std::sqrt(2.0 * consts.hbar * s.f / (consts.epsilon * fp.volume * params.omega)) * fp.alpha0;
    const double ampE = params.omega * std::sqrt(1.0 + s.z * s.z) * bigA / s.f;
    const double ampB = -bigA * fp.k;
    const double delta = atan_xy(-s.z, 1.0);
    const double chi = fp.k * x - s.theta - fp.theta;
    return FieldSample{bigA,
                       ampE,
                       ampB,
                       delta,
                       bigA * std::cos(chi),
                       ampE * std::cos(chi + delta),
                       ampB * std::sin(chi)};
}

double vector_potential(double x, double t, const ModeParams& params,
                        const QuantumConstants& consts, const FieldParams& fp) {
    return field_sample(x, t, params, consts, fp).a;
}

double electric_field(double x, double t, const ModeParams& params, const QuantumConstants& consts,
                      const FieldParams& fp) {
    return field_sample(x, t, params, consts, fp).e;
}

double magnetic_field(double x, double t, const ModeParams& params, const QuantumConstants& consts,
                      const FieldParams& fp) {
    return field_sample(x, t, params, consts, fp).b;
}

double electric_phase(double x, double t, const ModeParams& params, const FieldParams& fp) {
    const double delta = atan_xy(-eval_fdot_z(params, t).z, 1.0);
    return fp.k * x - eval_theta(params, t) - fp.theta + delta;
}

double interference_field(double x, double t, const ModeParams& mode_one,
                          const ModeParams& mode_two, const QuantumConstants& consts,
                          const FieldParams& fp) {
    if (mode_one.c1 != mode_two.c1 || mode_one.c2 != mode_two.c2 ||
        std::abs(mode_one.c3) != std::abs(mode_two.c3) || mode_one.t0 != mode_two.t0 ||
        mode_one.phi != mode_two.phi)
        throw Error(ErrorCode::ModeMismatch, "interfering modes may differ only in omega");
    return electric_field(x, t, mode_one, consts, fp) + electric_field(x, t, mode_two, consts, fp);
}

}  // namespace nonstatic
