#pragma once

// Time function f(t) of a nonstatic mode and its phase integral.
//
//   f(t)  = c1 sin^2 p + c2 cos^2 p + c3 sin 2p,   p = omega (t - t0) + phi
//   T(t)  = int_{t0}^{t} dt' / f(t'),   Theta(t) = omega T(t)
//
// with c1 c2 - c3^2 = 1, c1 c2 >= 1 and -pi/2 <= phi < pi/2.

#include <cstdint>
#include <span>
#include <vector>

namespace nonstatic {

enum class C3Branch { Positive, Negative };

struct ModeParams {
    double omega = 1.0;
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 0.0;
    double t0 = 0.0;
    double phi = 0.0;

    bool operator==(const ModeParams&) const = default;
};

struct TimeSample {
    double t = 0.0;
    double f = 1.0;
    double fdot = 0.0;
    double z = 0.0;      // fdot / (2 omega)
    double theta = 0.0;  // Theta(t)
    double bigT = 0.0;   // T(t) = Theta(t) / omega
};

/// Absolute tolerance on c1 c2 - c3^2 - 1, scaled by max(1, c1 c2).
inline constexpr double kConstraintTolerance = 1e-9;

/// Returns `params` unchanged or throws NonPositiveFrequency,
/// CoefficientConstraintViolated or PhiOutOfRange.
ModeParams validate(const ModeParams& params);

/// sign * sqrt(c1 c2 - 1).
double resolve_c3(double c1, double c2, C3Branch branch = C3Branch::Positive);

/// Convenience: validated params with c3 resolved from (c1, c2).
ModeParams make_mode(double omega, double c1, double c2, C3Branch branch = C3Branch::Positive,
                     double t0 = 0.0, double phi = 0.0);

double eval_f(const ModeParams& params, double t);

struct FdotZ {
    double fdot;
    double z;
};
FdotZ eval_fdot_z(const ModeParams& params, double t);

/// Number of divergences of tan(p) in (t0, t]; right-continuous.
std::int64_t step_count(const ModeParams& params, double t);

/// Closed-form Theta(t) with the branch of arctan tracked by step_count.
double eval_theta(const ModeParams& params, double t);

/// T(t) = Theta(t) / omega.
double eval_bigT(const ModeParams& params, double t);

TimeSample sample(const ModeParams& params, double t);

/// omega * int_{t0}^{t} dt'/f by adaptive quadrature (relative tolerance
/// 1e-10). Independent of eval_theta; intended as a test oracle.
double oracle_theta(const ModeParams& params, double t);

/// Oracle values at ascending times, integrating successive gaps and
/// accumulating. Equivalent to calling oracle_theta per time, but linear cost.
std::vector<double> oracle_theta_series(const ModeParams& params, std::span<const double> times);

/// sqrt((c1 + c2)^2 - 4) / (2 sqrt 2).
double measure_DF(double c1, double c2);

/// Analytic extremes of f: (c1+c2)/2 -/+ sqrt((c1+c2)^2/4 - 1).
double f_min(const ModeParams& params);
double f_max(const ModeParams& params);

/// Times in [t_begin, t_end] at which f attains its minimum (the nodes of the
/// wave packet). Empty for a static mode, where f is constant.
std::vector<double> node_times(const ModeParams& params, double t_begin, double t_end);

/// Period of f (and of the per-period step in Theta): pi / omega.
double half_period(const ModeParams& params);

bool is_static(const ModeParams& params);

}  // namespace nonstatic
