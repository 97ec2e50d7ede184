#pragma once

// Fock eigenfunctions of a nonstatic mode in quadrature space:
//
//   phi_n(q, t) = (zeta/pi)^{1/4} (2^n n!)^{-1/2} H_n(sqrt(zeta) q) exp(-zeta' q^2 / 2)
//
// zeta = eps omega / (hbar f), zeta' = zeta - i eps fdot / (2 hbar f).

#include <complex>

#include "nonstatic/phases.hpp"
#include "nonstatic/timebase.hpp"

namespace nonstatic {

using complex = std::complex<double>;

inline constexpr int kMaxFockIndex = 50;
/// From this index on, eigenfunctions go through the normalized recurrence.
inline constexpr int kScaledRecurrenceIndex = 25;

struct QuantumConstants {
    double hbar = 1.0;
    double epsilon = 1.0;
};

QuantumConstants validate(const QuantumConstants& consts);

struct WidthParams {
    double zeta;
    complex zetaPrime;
};

struct SuperpositionSpec {
    int n = 0;
    int m = 1;
    complex betaN{1.0, 0.0};
    complex betaM{0.0, 0.0};
};

/// Throws WeightNormalizationViolated unless |betaN|^2 + |betaM|^2 = 1 to
/// 1e-12, InvalidArgument if n == m or an index is out of range.
SuperpositionSpec validate(const SuperpositionSpec& spec);

WidthParams width_params(const ModeParams& params, const QuantumConstants& consts, double t);

/// Physicists' Hermite polynomial H_n(x), n <= 50.
double hermite(int n, double x);

/// Normalized Hermite function pi^{-1/4} (2^n n!)^{-1/2} H_n(x) e^{-x^2/2},
/// by the three-term recurrence on normalized terms (no overflow for n <= 50).
double hermite_function(int n, double x);

complex eigenfunction(int n, double q, const ModeParams& params, const QuantumConstants& consts,
                      double t);

/// Both evaluation routes, exposed so that they can be compared; eigenfunction
/// picks direct below kScaledRecurrenceIndex and scaled above.
complex eigenfunction_direct(int n, double q, const WidthParams& w);
complex eigenfunction_scaled(int n, double q, const WidthParams& w);

/// phi_n exp(i gamma_n(t)).
complex wavefunction(int n, double q, const ModeParams& params, const QuantumConstants& consts,
                     const PhaseState& state, double t);

struct SuperpositionDensity {
    double total;  // |betaN psi_n + betaM psi_m|^2
    double cross;  // 2 Re[conj(betaN psi_n) betaM psi_m]
};

SuperpositionDensity superposition_density(const SuperpositionSpec& spec, double q,
                                           const ModeParams& params,
                                           const QuantumConstants& consts,
                                           const PhaseState& state_n, const PhaseState& state_m,
                                           double t);

/// Half-width of the q range holding essentially all of |phi_n|^2:
/// 6 sqrt((2n+1)/zeta) + 2/sqrt(zeta).
double quadrature_half_width(int n, double zeta);

}  // namespace nonstatic
