#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "nonstatic/analysis.hpp"
#include "nonstatic/error.hpp"
#include "nonstatic/quadrature.hpp"

using namespace nonstatic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grids") {
    const auto l = analysis::linspace(0.0, 1.0, 5);
    REQUIRE(l.size() == 5);
    CHECK(l[2] == 0.5);
    CHECK(l.back() == 1.0);
    CHECK_THROWS_AS(analysis::linspace(0.0, 1.0, 1), Error);
    const auto p = analysis::periodic_grid(0.0, 1.0, 4);
    CHECK(p.back() == 0.75);
}

TEST_CASE("rms, argmax, argmin") {
    const std::vector<double> v{3.0, -4.0, 0.0, 1.0};
    CHECK(analysis::rms(v) == doctest::Approx(std::sqrt(26.0 / 4)));
    CHECK(analysis::argmax(v) == 0);
    CHECK(analysis::argmin(v) == 1);
    CHECK(analysis::rms(std::vector<double>{}) == 0.0);
}

TEST_CASE("dominant_bin of a pure and a mixed tone") {
    const auto grid = analysis::periodic_grid(0.0, 2 * kPi, 256);
    std::vector<double> pure(grid.size()), mixed(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        pure[i] = std::cos(5 * grid[i] + 0.3);
        mixed[i] = std::cos(5 * grid[i]) + 0.5 * std::sin(9 * grid[i]);
    }
    const auto a = analysis::dominant_bin(pure);
    CHECK(a.dominant_bin == 5);
    CHECK(a.dominant_fraction == doctest::Approx(1.0).epsilon(1e-12));
    const auto b = analysis::dominant_bin(mixed);
    CHECK(b.dominant_bin == 5);
    CHECK(b.dominant_fraction == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("beat_period of two tones") {
    const double dt = 0.02;
    std::vector<double> s;
    for (double t = 0.0; t < 60 * kPi; t += dt) s.push_back(std::cos(t) + std::cos(1.25 * t));
    const auto est = analysis::beat_period(s, 0.0, dt);
    REQUIRE(est);
    CHECK(est->period == doctest::Approx(8 * kPi).epsilon(0.01));
    CHECK_FALSE(analysis::beat_period(std::vector<double>{1, 2}, 0.0, 1.0));
}

TEST_CASE("plateau_fraction") {
    std::vector<double> square;
    for (int i = 0; i < 100; ++i) square.push_back(i < 50 ? 1.0 : -1.0);
    square[10] = 0.0;
    CHECK(analysis::plateau_fraction(square, 0.05) == doctest::Approx(0.99));
}

TEST_CASE("ridge_velocity of a travelling pattern") {
    const std::size_t cols = 128;
    const double dx = 2 * kPi / cols, dt = 0.05;
    std::vector<double> map;
    for (int r = 0; r < 20; ++r)
        for (std::size_t j = 0; j < cols; ++j) map.push_back(std::cos(3.0 * (j * dx) - 3.0 * 0.7 * r * dt));
    const auto v = analysis::ridge_velocity(map, cols, dx, dt, 10);
    REQUIRE(v);
    CHECK(*v == doctest::Approx(0.7).epsilon(0.02));
}

TEST_CASE("adaptive Simpson quadrature") {
    const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.evaluations > 0);
    const double cuts[] = {0.5};
    const auto k = quad::integrate([](double x) { return std::abs(x - 0.5); }, 0.0, 1.0, {}, cuts);
    CHECK(k.value == doctest::Approx(0.25).epsilon(1e-12));
    const auto g = quad::integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(g.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-11));
    CHECK(quad::integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
    quad::Options tight;
    tight.abs_tol = 1e-300;
    tight.max_depth = 4;
    CHECK_THROWS_AS(quad::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight), Error);
}
