#pragma once

// Post-processing of sampled signals and (x, t) maps.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nonstatic::analysis {

/// n points from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// n points lo, lo + (hi-lo)/n, ...; hi excluded. For whole-period sampling.
std::vector<double> periodic_grid(double lo, double hi, std::size_t n);

double rms(std::span<const double> samples);

/// Index of the maximum / minimum (first on ties).
std::size_t argmax(std::span<const double> samples);
std::size_t argmin(std::span<const double> samples);

struct Spectrum {
    std::size_t dominant_bin = 0;
    double dominant_fraction = 0.0;  // share of total one-sided power
};

/// One-sided power spectrum by direct DFT; identifies the strongest bin.
Spectrum dominant_bin(std::span<const double> samples);

struct BeatEstimate {
    double period;
    std::vector<double> peak_times;
};

/// Envelope peak spacing of a beating signal sampled uniformly from t_start with
/// step dt. Carrier maxima of |s| sample the envelope; each run of carrier
/// maxima above the envelope mid-level yields one envelope peak, located by a
/// parabola through the largest member and its neighbours. Runs cut off by the
/// record ends are dropped. Empty when fewer than two peaks are found.
std::optional<BeatEstimate> beat_period(std::span<const double> samples, double t_start, double dt);

/// Share of samples whose |value| lies within tol of the median |value|.
/// Near 1 for a two-level (rectangular) signal.
double plateau_fraction(std::span<const double> samples, double tol);

/// Drift velocity of the pattern in a row-major map (rows: time, columns: x).
/// Each pair of consecutive rows is cross-correlated over shifts up to
/// max_shift columns; the sub-column peak is converted with dx/dt. Returns the
/// median over row pairs, or nullopt if no pair had signal.
std::optional<double> ridge_velocity(std::span<const double> map, std::size_t columns, double dx,
                                     double dt, std::size_t max_shift);

}  // namespace nonstatic::analysis
