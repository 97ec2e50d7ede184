#pragma once

// Globally adaptive Simpson quadrature.
//
// The range is first cut at the caller's breakpoints and into `initial_panels`
// equal panels per piece, so that narrow features (peaks of 1/f, oscillating
// Hermite products) are seen by at least one sample. Afterwards the interval
// with the largest Richardson error estimate is bisected until the summed
// estimate drops below the requested tolerance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "nonstatic/error.hpp"

namespace nonstatic::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;       // combined as max(abs_tol, rel_tol * |I|)
    int initial_panels = 16;    // per breakpoint-delimited piece
    int max_depth = 60;         // bisections below an initial panel
    std::size_t max_intervals = 2'000'000;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

struct Interval {
    double a, b;
    double fa, fm, fb;  // endpoints and midpoint
    double fl, fr;      // quarter points
    double coarse, fine, err;
    int depth;

    bool operator<(const Interval& other) const { return err < other.err; }
};

template <class F>
Interval make_interval(F& f, double a, double b, double fa, double fm, double fb, int depth,
                       std::size_t& evals) {
    const double m = 0.5 * (a + b);
    const double fl = f(0.5 * (a + m));
    const double fr = f(0.5 * (m + b));
    evals += 2;
    const double h = b - a;
    const double coarse = h / 6.0 * (fa + 4.0 * fm + fb);
    const double fine = h / 12.0 * (fa + 4.0 * fl + 2.0 * fm + 4.0 * fr + fb);
    return Interval{a, b, fa, fm, fb, fl, fr, coarse, fine, std::abs(fine - coarse) / 15.0, depth};
}

inline double richardson(const Interval& iv) { return iv.fine + (iv.fine - iv.coarse) / 15.0; }

}  // namespace detail

/// Integrates `f` over [a, b]. Breakpoints outside (a, b) are ignored.
/// Throws QuadratureNonConvergence when the depth or interval budget is hit
/// before the tolerance is met.
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {},
                 std::span<const double> breakpoints = {}) {
    Result res;
    if (a == b) return res;
    const double sign = a < b ? 1.0 : -1.0;
    if (a > b) std::swap(a, b);

    std::vector<double> cuts{a};
    for (double bp : breakpoints)
        if (bp > a && bp < b) cuts.push_back(bp);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::priority_queue<detail::Interval> heap;
    double total = 0.0;
    double total_err = 0.0;
    const int panels = std::max(1, opt.initial_panels);
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double lo = cuts[p];
        const double width = (cuts[p + 1] - lo) / panels;
        double x0 = lo;
        double f0 = f(x0);
        ++res.evaluations;
        for (int i = 0; i < panels; ++i) {
            const double x1 = (i + 1 == panels) ? cuts[p + 1] : lo + (i + 1) * width;
            const double f1 = f(x1);
            const double fm = f(0.5 * (x0 + x1));
            res.evaluations += 2;
            auto iv = detail::make_interval(f, x0, x1, f0, fm, f1, 0, res.evaluations);
            total += detail::richardson(iv);
            total_err += iv.err;
            heap.push(iv);
            x0 = x1;
            f0 = f1;
        }
    }

    auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };

    while (total_err > tolerance()) {
        if (heap.size() >= opt.max_intervals)
            throw Error(ErrorCode::QuadratureNonConvergence,
                        "interval budget exhausted (error estimate " + std::to_string(total_err) +
                            ")");
        const detail::Interval iv = heap.top();
        heap.pop();
        if (iv.depth >= opt.max_depth)
            throw Error(ErrorCode::QuadratureNonConvergence,
                        "maximum bisection depth reached near t=" + std::to_string(iv.a));
        const double m = 0.5 * (iv.a + iv.b);
        auto left = detail::make_interval(f, iv.a, m, iv.fa, iv.fl, iv.fm, iv.depth + 1,
                                          res.evaluations);
        auto right = detail::make_interval(f, m, iv.b, iv.fm, iv.fr, iv.fb, iv.depth + 1,
                                           res.evaluations);
        total += detail::richardson(left) + detail::richardson(right) - detail::richardson(iv);
        total_err += left.err + right.err - iv.err;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum from the leaves; the running total accumulates cancellation error.
    double sum = 0.0;
    double err = 0.0;
    while (!heap.empty()) {
        sum += detail::richardson(heap.top());
        err += heap.top().err;
        heap.pop();
    }
    res.value = sign * sum;
    res.error_estimate = err;
    return res;
}

}  // namespace nonstatic::quad
