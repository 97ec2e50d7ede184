#include "nonstatic/wavefunctions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nonstatic/error.hpp"

namespace nonstatic {

namespace {

void require_index(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "Fock index must be >= 0");
    if (n > kMaxFockIndex)
        throw Error(ErrorCode::IndexTooLarge,
                    "n=" + std::to_string(n) + " exceeds " + std::to_string(kMaxFockIndex));
}

}  // namespace

QuantumConstants validate(const QuantumConstants& consts) {
    if (!(consts.hbar > 0.0) || !(consts.epsilon > 0.0) || !std::isfinite(consts.hbar) ||
        !std::isfinite(consts.epsilon))
        throw Error(ErrorCode::InvalidArgument, "hbar and epsilon must be positive");
    return consts;
}

SuperpositionSpec validate(const SuperpositionSpec& spec) {
    require_index(spec.n);
    require_index(spec.m);
    if (spec.n == spec.m) throw Error(ErrorCode::InvalidArgument, "superposition needs m != n");
    const double norm = std::norm(spec.betaN) + std::norm(spec.betaM);
    if (!(std::abs(norm - 1.0) <= 1e-12))
        throw Error(ErrorCode::WeightNormalizationViolated,
                    "|betaN|^2 + |betaM|^2 = " + std::to_string(norm));
    return spec;
}

WidthParams width_params(const ModeParams& params, const QuantumConstants& consts, double t) {
    if (!(t >= params.t0)) throw Error(ErrorCode::TimeBeforeReference, "t precedes t0");
    const double f = eval_f(params, t);
    const double fdot = eval_fdot_z(params, t).fdot;
    const double zeta = consts.epsilon * params.omega / (consts.hbar * f);
    return WidthParams{zeta, complex{zeta, -consts.epsilon * fdot / (2.0 * consts.hbar * f)}};
}

double hermite(int n, double x) {
    require_index(n);
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double hermite_function(int n, double x) {
    require_index(n);
    double prev = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n == 0) return prev;
    double cur = std::numbers::sqrt2 * x * prev;
    for (int k = 1; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(double(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

complex eigenfunction_direct(int n, double q, const WidthParams& w) {
    require_index(n);
    const double root_zeta = std::sqrt(w.zeta);
    const double norm = std::sqrt(std::sqrt(w.zeta / std::numbers::pi)) *
                        std::exp(-0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0)));
    return norm * hermite(n, root_zeta * q) * std::exp(-0.5 * w.zetaPrime * q * q);
}

complex eigenfunction_scaled(int n, double q, const WidthParams& w) {
    const double real_part = std::sqrt(std::sqrt(w.zeta)) * hermite_function(n, std::sqrt(w.zeta) * q);
    // exp(-zeta' q^2/2) = exp(-zeta q^2/2) exp(-i Im(zeta') q^2/2); the first factor sits in h_n
    return std::polar(1.0, -0.5 * w.zetaPrime.imag() * q * q) * real_part;
}

complex eigenfunction(int n, double q, const ModeParams& params, const QuantumConstants& consts,
                      double t) {
    require_index(n);
    const WidthParams w = width_params(params, consts, t);
    return n < kScaledRecurrenceIndex ? eigenfunction_direct(n, q, w)
                                      : eigenfunction_scaled(n, q, w);
}

complex wavefunction(int n, double q, const ModeParams& params, const QuantumConstants& consts,
                     const PhaseState& state, double t) {
    if (state.n != n) throw Error(ErrorCode::InvalidArgument, "phase state index differs from n");
    return eigenfunction(n, q, params, consts, t) * std::polar(1.0, total_phase(params, state, t));
}

SuperpositionDensity superposition_density(const SuperpositionSpec& spec, double q,
                                           const ModeParams& params,
                                           const QuantumConstants& consts,
                                           const PhaseState& state_n, const PhaseState& state_m,
                                           double t) {
    validate(spec);
    const complex a = spec.betaN * wavefunction(spec.n, q, params, consts, state_n, t);
    const complex b = spec.betaM * wavefunction(spec.m, q, params, consts, state_m, t);
    return SuperpositionDensity{std::norm(a + b), 2.0 * (std::conj(a) * b).real()};
}

double quadrature_half_width(int n, double zeta) {
    return 6.0 * std::sqrt((2.0 * n + 1.0) / zeta) + 2.0 / std::sqrt(zeta);
}

}  // namespace nonstatic
