#include "nonstatic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "nonstatic/error.hpp"

namespace nonstatic::analysis {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "linspace needs at least two points");
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + static_cast<double>(i) * step;
    out.back() = hi;
    return out;
}

std::vector<double> periodic_grid(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    const double step = (hi - lo) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + static_cast<double>(i) * step;
    return out;
}

double rms(std::span<const double> samples) {
    if (samples.empty()) return 0.0;
    double acc = 0.0;
    for (double v : samples) acc += v * v;
    return std::sqrt(acc / static_cast<double>(samples.size()));
}

std::size_t argmax(std::span<const double> samples) {
    return static_cast<std::size_t>(std::max_element(samples.begin(), samples.end()) -
                                    samples.begin());
}

std::size_t argmin(std::span<const double> samples) {
    return static_cast<std::size_t>(std::min_element(samples.begin(), samples.end()) -
                                    samples.begin());
}

Spectrum dominant_bin(std::span<const double> samples) {
    const std::size_t n = samples.size();
    Spectrum out;
    if (n < 2) return out;
    std::vector<std::complex<double>> twiddle(n);
    for (std::size_t j = 0; j < n; ++j)
        twiddle[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) /
                                         static_cast<double>(n));
    double total = 0.0;
    double best = -1.0;
    for (std::size_t k = 0; k <= n / 2; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += samples[j] * twiddle[(j * k) % n];
        double power = std::norm(acc);
        if (k != 0 && !(n % 2 == 0 && k == n / 2)) power *= 2.0;  // fold negative frequencies
        total += power;
        if (power > best) {
            best = power;
            out.dominant_bin = k;
        }
    }
    out.dominant_fraction = total > 0.0 ? best / total : 0.0;
    return out;
}

namespace {

struct Point {
    double t;
    double v;
};

// vertex of the parabola through three points
double vertex(const Point& p0, const Point& p1, const Point& p2) {
    const double d0 = p1.t - p0.t;
    const double d2 = p1.t - p2.t;
    const double num = d0 * d0 * (p1.v - p2.v) - d2 * d2 * (p1.v - p0.v);
    const double den = d0 * (p1.v - p2.v) - d2 * (p1.v - p0.v);
    if (den == 0.0) return p1.t;
    return p1.t - 0.5 * num / den;
}

}  // namespace

std::optional<BeatEstimate> beat_period(std::span<const double> samples, double t_start,
                                        double dt) {
    const std::size_t n = samples.size();
    if (n < 5) return std::nullopt;

    // carrier maxima of |s|, refined by a three-point parabola
    std::vector<Point> carrier;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double y0 = std::abs(samples[i - 1]);
        const double y1 = std::abs(samples[i]);
        const double y2 = std::abs(samples[i + 1]);
        if (!(y1 > y0 && y1 >= y2)) continue;
        const double curv = y0 - 2.0 * y1 + y2;
        const double shift = curv != 0.0 ? 0.5 * (y0 - y2) / curv : 0.0;
        carrier.push_back(Point{t_start + (static_cast<double>(i) + shift) * dt,
                                y1 - 0.25 * (y0 - y2) * shift});
    }
    if (carrier.size() < 3) return std::nullopt;

    const auto [lo, hi] = std::minmax_element(carrier.begin(), carrier.end(),
                                              [](const Point& a, const Point& b) { return a.v < b.v; });
    const double mid = 0.5 * (lo->v + hi->v);
    if (!(hi->v > lo->v)) return std::nullopt;

    BeatEstimate est{0.0, {}};
    std::size_t i = 0;
    while (i < carrier.size()) {
        if (carrier[i].v <= mid) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::size_t best = i;
        while (j < carrier.size() && carrier[j].v > mid) {
            if (carrier[j].v > carrier[best].v) best = j;
            ++j;
        }
        const bool truncated = (i == 0) || (j == carrier.size());
        if (!truncated && best > 0 && best + 1 < carrier.size())
            est.peak_times.push_back(vertex(carrier[best - 1], carrier[best], carrier[best + 1]));
        i = j;
    }
    if (est.peak_times.size() < 2) return std::nullopt;
    est.period = (est.peak_times.back() - est.peak_times.front()) /
                 static_cast<double>(est.peak_times.size() - 1);
    return est;
}

double plateau_fraction(std::span<const double> samples, double tol) {
    if (samples.empty()) return 0.0;
    std::vector<double> mags(samples.size());
    std::transform(samples.begin(), samples.end(), mags.begin(),
                   [](double v) { return std::abs(v); });
    std::vector<double> sorted = mags;
    const auto mid = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2);
    std::nth_element(sorted.begin(), mid, sorted.end());
    const double median = *mid;
    const auto inside = std::count_if(mags.begin(), mags.end(),
                                      [&](double m) { return std::abs(m - median) <= tol; });
    return static_cast<double>(inside) / static_cast<double>(mags.size());
}

std::optional<double> ridge_velocity(std::span<const double> map, std::size_t columns, double dx,
                                     double dt, std::size_t max_shift) {
    if (columns < 3 || map.size() < 2 * columns || map.size() % columns != 0) return std::nullopt;
    const std::size_t rows = map.size() / columns;
    max_shift = std::min(max_shift, columns - 2);
    const auto shift_range = static_cast<std::ptrdiff_t>(max_shift);
    std::vector<double> velocities;
    for (std::size_t r = 0; r + 1 < rows; ++r) {
        const double* u = map.data() + r * columns;
        const double* v = u + columns;
        auto corr = [&](std::ptrdiff_t s) {
            double uv = 0.0, uu = 0.0, vv = 0.0;
            for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(columns); ++j) {
                const std::ptrdiff_t k = j + s;
                if (k < 0 || k >= static_cast<std::ptrdiff_t>(columns)) continue;
                uv += u[j] * v[k];
                uu += u[j] * u[j];
                vv += v[k] * v[k];
            }
            return (uu > 0.0 && vv > 0.0) ? uv / std::sqrt(uu * vv) : 0.0;
        };
        std::ptrdiff_t best = 0;
        double best_c = -2.0;
        for (std::ptrdiff_t s = -shift_range; s <= shift_range; ++s) {
            const double c = corr(s);
            if (c > best_c) {
                best_c = c;
                best = s;
            }
        }
        if (best_c <= 0.0) continue;
        double refined = static_cast<double>(best);
        if (best > -shift_range && best < shift_range) {
            const double cm = corr(best - 1);
            const double cp = corr(best + 1);
            const double curv = cm - 2.0 * best_c + cp;
            if (curv < 0.0) refined += 0.5 * (cm - cp) / curv;
        }
        velocities.push_back(refined * dx / dt);
    }
    if (velocities.empty()) return std::nullopt;
    const auto mid = velocities.begin() + static_cast<std::ptrdiff_t>(velocities.size() / 2);
    std::nth_element(velocities.begin(), mid, velocities.end());
    return *mid;
}

}  // namespace nonstatic::analysis
