#include "nonstatic/timebase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nonstatic/error.hpp"
#include "nonstatic/quadrature.hpp"

namespace nonstatic {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const ModeParams& p) {
    std::ostringstream os;
    os.precision(17);
    os << "(omega=" << p.omega << ", c1=" << p.c1 << ", c2=" << p.c2 << ", c3=" << p.c3
       << ", t0=" << p.t0 << ", phi=" << p.phi << ")";
    return os.str();
}

void require_after_reference(const ModeParams& p, double t) {
    if (!(t >= p.t0))
        throw Error(ErrorCode::TimeBeforeReference,
                    "t=" + std::to_string(t) + " precedes t0=" + std::to_string(p.t0));
}

double angle(const ModeParams& p, double t) { return p.omega * (t - p.t0) + p.phi; }

// c2 implied by (c1, c3) under c1 c2 - c3^2 = 1. Evaluating f through it keeps
// f, its minimum and the closed-form Theta mutually exact even when c3 carries
// the rounding of a square root.
double implied_c2(const ModeParams& p) { return (1.0 + p.c3 * p.c3) / p.c1; }

struct Harmonic {
    double mean;       // (c1 + c2)/2
    double amplitude;  // sqrt(((c2-c1)/2)^2 + c3^2)
    double psi;        // f = mean + amplitude cos(2p - psi)
};

Harmonic harmonic(const ModeParams& p) {
    const double c2 = implied_c2(p);
    const double half_diff = 0.5 * (c2 - p.c1);
    return Harmonic{0.5 * (p.c1 + c2), std::hypot(half_diff, p.c3), std::atan2(p.c3, half_diff)};
}

// arctan Z continued across the poles of tan: with p = k pi - pi/2 + r and
// r in [0, pi), tan p = -cot r, so arctan(c3 + c1 tan p) = atan2(c3 sin r - c1 cos r, sin r).
double continued_arctan(const ModeParams& p, double r) {
    return std::atan2(p.c3 * std::sin(r) - p.c1 * std::cos(r), std::sin(r));
}

}  // namespace

ModeParams validate(const ModeParams& params) {
    if (!(params.omega > 0.0) || !std::isfinite(params.omega))
        throw Error(ErrorCode::NonPositiveFrequency, describe(params));
    if (!std::isfinite(params.c1) || !std::isfinite(params.c2) || !std::isfinite(params.c3) ||
        !std::isfinite(params.t0))
        throw Error(ErrorCode::CoefficientConstraintViolated, "non-finite input " + describe(params));
    if (!(params.c1 > 0.0) || !(params.c2 > 0.0))
        throw Error(ErrorCode::CoefficientConstraintViolated,
                    "c1 and c2 must be positive " + describe(params));
    const double product = params.c1 * params.c2;
    if (product < 1.0)
        throw Error(ErrorCode::CoefficientConstraintViolated, "c1 c2 < 1 " + describe(params));
    // residual c1c2 - c3^2 - 1 with the square's rounding error recovered by fma
    const double sq = params.c3 * params.c3;
    const double sq_err = std::fma(params.c3, params.c3, -sq);
    const double residual = (std::fma(params.c1, params.c2, -sq) - sq_err) - 1.0;
    if (std::abs(residual) > kConstraintTolerance * std::max(1.0, product))
        throw Error(ErrorCode::CoefficientConstraintViolated,
                    "c1 c2 - c3^2 - 1 = " + std::to_string(residual) + " " + describe(params));
    if (!(params.phi >= -kPi / 2) || !(params.phi < kPi / 2))
        throw Error(ErrorCode::PhiOutOfRange, "phi must lie in [-pi/2, pi/2) " + describe(params));
    return params;
}

double resolve_c3(double c1, double c2, C3Branch branch) {
    if (!(c1 > 0.0) || !(c2 > 0.0) || c1 * c2 < 1.0)
        throw Error(ErrorCode::CoefficientConstraintViolated,
                    "cannot resolve c3 for c1=" + std::to_string(c1) + ", c2=" + std::to_string(c2));
    const double magnitude = std::sqrt(std::fma(c1, c2, -1.0));
    return branch == C3Branch::Positive ? magnitude : -magnitude;
}

ModeParams make_mode(double omega, double c1, double c2, C3Branch branch, double t0, double phi) {
    return validate(ModeParams{omega, c1, c2, resolve_c3(c1, c2, branch), t0, phi});
}

double eval_f(const ModeParams& params, double t) {
    // c1 f = (c1 sin p + c3 cos p)^2 + cos^2 p, a sum of squares: no cancellation
    // near the minima, where the three terms of the textbook form nearly cancel.
    const double p = angle(params, t);
    const double s = std::sin(p);
    const double c = std::cos(p);
    const double u = params.c1 * s + params.c3 * c;
    return (u * u + c * c) / params.c1;
}

FdotZ eval_fdot_z(const ModeParams& params, double t) {
    const double p = angle(params, t);
    const double s2 = std::sin(2.0 * p);
    const double c2 = std::cos(2.0 * p);
    const double fdot = (params.c1 - implied_c2(params)) * params.omega * s2 +
                        2.0 * params.c3 * params.omega * c2;
    return {fdot, fdot / (2.0 * params.omega)};
}

std::int64_t step_count(const ModeParams& params, double t) {
    require_after_reference(params, t);
    const double k = std::floor(angle(params, t) / kPi + 0.5);
    return k > 0.0 ? static_cast<std::int64_t>(k) : 0;
}

double eval_theta(const ModeParams& params, double t) {
    const std::int64_t k = step_count(params, t);
    const double r = angle(params, t) + kPi / 2 - static_cast<double>(k) * kPi;
    const double r0 = params.phi + kPi / 2;
    return continued_arctan(params, r) - continued_arctan(params, r0) +
           kPi * static_cast<double>(k);
}

double eval_bigT(const ModeParams& params, double t) {
    return eval_theta(params, t) / params.omega;
}

TimeSample sample(const ModeParams& params, double t) {
    const double theta = eval_theta(params, t);
    const auto [fdot, z] = eval_fdot_z(params, t);
    return TimeSample{t, eval_f(params, t), fdot, z, theta, theta / params.omega};
}

namespace {

double oracle_segment(const ModeParams& params, double a, double b) {
    if (a == b) return 0.0;
    std::vector<double> cuts = node_times(params, a, b);
    // uniform cuts every eighth of a period of f
    const double step = half_period(params) / 8.0;
    for (double x = params.t0 + std::ceil((a - params.t0) / step) * step; x < b; x += step)
        cuts.push_back(x);
    quad::Options opt;
    opt.abs_tol = 0.0;
    opt.rel_tol = 1e-10;
    opt.initial_panels = 2;
    opt.max_depth = 60;
    const auto integrand = [&](double x) { return params.omega / eval_f(params, x); };
    return quad::integrate(integrand, a, b, opt, cuts).value;
}

}  // namespace

double oracle_theta(const ModeParams& params, double t) {
    require_after_reference(params, t);
    return oracle_segment(params, params.t0, t);
}

std::vector<double> oracle_theta_series(const ModeParams& params, std::span<const double> times) {
    std::vector<double> out;
    out.reserve(times.size());
    double prev = params.t0;
    double acc = 0.0;
    for (double t : times) {
        require_after_reference(params, t);
        if (t < prev)
            throw Error(ErrorCode::InvalidArgument, "oracle_theta_series needs ascending times");
        acc += oracle_segment(params, prev, t);
        out.push_back(acc);
        prev = t;
    }
    return out;
}

double measure_DF(double c1, double c2) {
    const double s = c1 + c2;
    if (!(s * s >= 4.0))
        throw Error(ErrorCode::CoefficientConstraintViolated,
                    "(c1 + c2)^2 < 4 for c1=" + std::to_string(c1) + ", c2=" + std::to_string(c2));
    return std::sqrt(s * s - 4.0) / (2.0 * std::numbers::sqrt2);
}

double f_min(const ModeParams& params) {
    const auto h = harmonic(params);
    // (mean - amplitude)(mean + amplitude) = 1
    return 1.0 / (h.mean + h.amplitude);
}

double f_max(const ModeParams& params) {
    const auto h = harmonic(params);
    return h.mean + h.amplitude;
}

std::vector<double> node_times(const ModeParams& params, double t_begin, double t_end) {
    std::vector<double> out;
    const auto h = harmonic(params);
    if (h.amplitude == 0.0 || t_end < t_begin) return out;
    // minima where 2p - psi = pi (mod 2 pi)
    const double p_node = 0.5 * (h.psi + kPi);
    const double base = params.t0 + (p_node - params.phi) / params.omega;
    const double period = half_period(params);
    const double j0 = std::ceil((t_begin - base) / period);
    for (double j = j0;; j += 1.0) {
        const double t = base + j * period;
        if (t > t_end) break;
        if (t >= t_begin) out.push_back(t);
    }
    return out;
}

double half_period(const ModeParams& params) { return kPi / params.omega; }

bool is_static(const ModeParams& params) { return harmonic(params).amplitude == 0.0; }

}  // namespace nonstatic
