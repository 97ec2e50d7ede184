#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nonstatic/error.hpp"
#include "nonstatic/phases.hpp"

using namespace nonstatic;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("phase_state and its validation") {
    CHECK(phase_state(3).n == 3);
    CHECK_THROWS_AS(phase_state(-1), Error);
    CHECK_NOTHROW(validate(PhaseState{2, 0.5, 0.2, 0.3}));
    CHECK_THROWS_AS(validate(PhaseState{2, 0.5, 0.2, 0.2}), Error);
}

TEST_CASE("total_phase examples") {
    CHECK(total_phase(ModeParams{}, phase_state(0), 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
    const PhaseState st{4, 0.7, 0.5, 0.2};
    const ModeParams m = make_mode(1.0, 100, 100, C3Branch::Negative, 1.0, -0.4);
    CHECK(total_phase(m, st, 1.0) == doctest::Approx(0.7).epsilon(1e-15));
    for (double t : {1.0, 2.2, 9.0})
        CHECK(total_phase(m, phase_state(7), t + kPi) - total_phase(m, phase_state(7), t) ==
              doctest::Approx(-7.5 * kPi).epsilon(1e-12));
}

TEST_CASE("dynamical_phase examples") {
    CHECK(dynamical_phase(ModeParams{}, phase_state(0), 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    const PhaseState st{7, 0.3, 0.3, 0.0};
    const ModeParams m = make_mode(1.0, 10000, 10000);
    CHECK(dynamical_phase(m, st, 1e-3) == doctest::Approx(-75.0 + 0.3).epsilon(1e-12));
    const double h = 1e-3;
    for (double t : {0.5, 2.0, 7.0})
        CHECK((dynamical_phase(m, st, t + h) - dynamical_phase(m, st, t - h)) / (2 * h) ==
              doctest::Approx(-0.5 * 7.5 * 20000).epsilon(1e-9));
    CHECK_THROWS_AS(dynamical_phase(m, st, -1.0), Error);
}

TEST_CASE("geometric_phase examples") {
    const PhaseState st{2, 0.9, 0.4, 0.5};
    for (double t : {0.0, 1.0, 17.0}) CHECK(geometric_phase(ModeParams{}, st, t) == doctest::Approx(0.5).epsilon(1e-13));

    const ModeParams m = make_mode(1.0, 10000, 10000);
    const PhaseState s7 = phase_state(7);
    const double gain = geometric_phase(m, s7, 1.0 + kPi) - geometric_phase(m, s7, 1.0);
    CHECK(gain == doctest::Approx(0.5 * 7.5 * (20000 * kPi - 2 * kPi)).epsilon(1e-12));
}

TEST_CASE("phase decomposition at moderate nonstaticity") {
    const PhaseState st{5, 0.1, 0.25, -0.15};
    for (auto [c1, c2] : {std::pair{1.0, 1.0}, std::pair{1.5, 1.0}, std::pair{1.5, 1.5}, std::pair{100.0, 100.0}})
        for (auto b : {C3Branch::Positive, C3Branch::Negative}) {
            const ModeParams m = make_mode(1.0, c1, c2, b);
            for (double t = 0.0; t < 31.0; t += 0.77)
                CHECK(std::abs(total_phase(m, st, t) - dynamical_phase(m, st, t) - geometric_phase(m, st, t)) <= 1e-10);
        }
}

TEST_CASE("geometric_phase_rate examples") {
    CHECK(geometric_phase_rate(ModeParams{}, phase_state(3), 1.2) == doctest::Approx(0.0));

    const ModeParams m = make_mode(1.0, 10000, 10000);
    const PhaseState st = phase_state(7);
    const double tn = node_times(m, 0.0, kPi).front();
    const double rate = geometric_phase_rate(m, st, tn);
    CHECK(rate == doctest::Approx(0.5 * 7.5 * (20000 - 2 / f_min(m))).epsilon(1e-9));
    CHECK(rate < 0.0);
    CHECK(rate == doctest::Approx(7.5 * (10000 - 20000)).epsilon(1e-3));

    const ModeParams g = make_mode(1.0, 1.5, 1.0, C3Branch::Negative);
    const double h = 1e-7 * 2 * kPi;
    for (double t = 0.2; t < 6.0; t += 0.41) {
        const double fd = (geometric_phase(g, st, t + h) - geometric_phase(g, st, t - h)) / (2 * h);
        CHECK(fd == doctest::Approx(geometric_phase_rate(g, st, t)).epsilon(1e-4));
    }
}
