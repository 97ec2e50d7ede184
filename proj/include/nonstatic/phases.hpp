#pragma once

#include "nonstatic/timebase.hpp"

namespace nonstatic {

/// Fock index with the phase constants at the reference time.
/// gamma0 must equal gammaD0 + gammaG0.
struct PhaseState {
    int n = 0;
    double gamma0 = 0.0;
    double gammaD0 = 0.0;
    double gammaG0 = 0.0;
};

/// Zero-offset state for index n.
PhaseState phase_state(int n);

/// Throws InvalidArgument if n < 0 or the offsets are inconsistent.
PhaseState validate(const PhaseState& state);

/// gamma_n(t) = -(n + 1/2) omega T(t) + gamma_n(t0).
double total_phase(const ModeParams& params, const PhaseState& state, double t);

/// Part of gamma_n linear in elapsed time.
double dynamical_phase(const ModeParams& params, const PhaseState& state, double t);

/// gamma_n - gamma_D; vanishes (up to its offset) for a static mode.
double geometric_phase(const ModeParams& params, const PhaseState& state, double t);

/// Analytic d gamma_G / dt = (n + 1/2) omega [(c1 + c2) - 2/f(t)] / 2.
double geometric_phase_rate(const ModeParams& params, const PhaseState& state, double t);

}  // namespace nonstatic
