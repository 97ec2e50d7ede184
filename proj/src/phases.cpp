#include "nonstatic/phases.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nonstatic/error.hpp"

namespace nonstatic {

namespace {

double half_index(const PhaseState& s) { return s.n + 0.5; }

// unevaluated sum hi + lo
struct Pair {
    double hi;
    double lo;
};

Pair times(Pair a, double b) {
    const double p = a.hi * b;
    return {p, std::fma(a.hi, b, -p) + a.lo * b};
}

Pair plus(Pair a, double b) {
    const double s = a.hi + b;
    const double bb = s - a.hi;
    return {s, (a.hi - (s - bb)) + (b - bb) + a.lo};
}

double round(Pair a) { return a.hi + a.lo; }

// (c1 + c2) * omega * (t - t0), carried in extended precision
Pair elapsed(const ModeParams& p, double t) {
    return times(times(Pair{p.c1 + p.c2, 0.0}, p.omega), t - p.t0);
}

void require_after_reference(const ModeParams& p, double t) {
    if (!(t >= p.t0))
        throw Error(ErrorCode::TimeBeforeReference,
                    "t=" + std::to_string(t) + " precedes t0=" + std::to_string(p.t0));
}

}  // namespace

PhaseState phase_state(int n) { return validate(PhaseState{n, 0.0, 0.0, 0.0}); }

PhaseState validate(const PhaseState& state) {
    if (state.n < 0) throw Error(ErrorCode::InvalidArgument, "Fock index must be >= 0");
    const double scale = std::max({1.0, std::abs(state.gammaD0), std::abs(state.gammaG0)});
    if (std::abs(state.gamma0 - (state.gammaD0 + state.gammaG0)) > 1e-12 * scale)
        throw Error(ErrorCode::InvalidArgument, "gamma0 != gammaD0 + gammaG0");
    return state;
}

double total_phase(const ModeParams& params, const PhaseState& state, double t) {
    return -half_index(state) * eval_theta(params, t) + state.gamma0;
}

double dynamical_phase(const ModeParams& params, const PhaseState& state, double t) {
    require_after_reference(params, t);
    return round(plus(times(elapsed(params, t), -0.5 * half_index(state)), state.gammaD0));
}

double geometric_phase(const ModeParams& params, const PhaseState& state, double t) {
    const Pair bracket = plus(elapsed(params, t), -2.0 * eval_theta(params, t));
    return round(plus(times(bracket, 0.5 * half_index(state)), state.gammaG0));
}

double geometric_phase_rate(const ModeParams& params, const PhaseState& state, double t) {
    require_after_reference(params, t);
    return 0.5 * half_index(state) * params.omega *
           ((params.c1 + params.c2) - 2.0 / eval_f(params, t));
}

}  // namespace nonstatic
