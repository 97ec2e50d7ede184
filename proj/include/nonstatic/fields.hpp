#pragma once

// Single-mode coherent field propagating along +x with one transverse
// polarization:
//
//   A(x,t) = amp_A(t) cos(k x - Theta(t) - theta)
//   E(x,t) = amp_E(t) cos(k x - Theta(t) - theta + delta(t))     (E = -dA/dt)
//   B(x,t) = amp_B(t) sin(k x - Theta(t) - theta)                (B =  dA/dx)
//
//   amp_A = alpha0 sqrt(2 hbar f / (eps V omega)),
//   amp_E = omega sqrt(1 + z^2) amp_A / f,  amp_B = -k amp_A,
//   delta = atan_xy(-z, 1).

#include <complex>

#include "nonstatic/timebase.hpp"
#include "nonstatic/wavefunctions.hpp"

namespace nonstatic {

struct FieldParams {
    double theta = 0.0;
    double alpha0 = 1.0;
    double k = 1.0;
    double volume = 1.0;
};

FieldParams validate(const FieldParams& fp);

struct FieldSample {
    double bigA;   // amp_A(t)
    double ampE;   // amp_E(t)
    double ampB;   // amp_B(t) = -k amp_A(t)
    double delta;  // in (0, pi)
    double a;
    double e;
    double b;
};

/// The angle mu in [0, 2 pi) with (cos mu, sin mu) parallel to (x, y).
/// Throws UndefinedAngle at the origin.
double atan_xy(double x, double y);

std::complex<double> coherent_eigenvalue(const ModeParams& params, const FieldParams& fp, double t);

FieldSample field_sample(double x, double t, const ModeParams& params,
                         const QuantumConstants& consts, const FieldParams& fp);

double vector_potential(double x, double t, const ModeParams& params,
                        const QuantumConstants& consts, const FieldParams& fp);
double electric_field(double x, double t, const ModeParams& params, const QuantumConstants& consts,
                      const FieldParams& fp);
double magnetic_field(double x, double t, const ModeParams& params, const QuantumConstants& consts,
                      const FieldParams& fp);

/// Phase of the E field, k x - Theta(t) - theta + delta(t).
double electric_phase(double x, double t, const ModeParams& params, const FieldParams& fp);

/// E_I + E_II for two modes that differ in omega only (c3 may differ in sign).
/// Throws ModeMismatch otherwise.
double interference_field(double x, double t, const ModeParams& mode_one,
                          const ModeParams& mode_two, const QuantumConstants& consts,
                          const FieldParams& fp);

}  // namespace nonstatic
