#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nonstatic/error.hpp"
#include "nonstatic/quadrature.hpp"
#include "nonstatic/wavefunctions.hpp"

using namespace nonstatic;

namespace {

constexpr double kPi = std::numbers::pi;

ModeParams gold() { return make_mode(1.0, 1.5, 1.5); }

double norm_integral(int n, const ModeParams& m, const QuantumConstants& c, double t) {
    const double half = quadrature_half_width(n, width_params(m, c, t).zeta);
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.initial_panels = 64;
    return quad::integrate([&](double q) { return std::norm(eigenfunction(n, q, m, c, t)); }, -half, half, opt).value;
}

}  // namespace

TEST_CASE("quantum constants and weights are validated") {
    CHECK_THROWS_AS(validate(QuantumConstants{0.0, 1.0}), Error);
    CHECK_THROWS_AS(validate(QuantumConstants{1.0, -2.0}), Error);
    CHECK_NOTHROW(validate(SuperpositionSpec{5, 8, {1 / std::sqrt(2.0), 0}, {0.5, 0.5}}));
    try {
        validate(SuperpositionSpec{5, 8, {1.0, 0}, {0.5, 0.5}});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WeightNormalizationViolated);
    }
    CHECK_THROWS_AS(validate(SuperpositionSpec{3, 3, {1.0, 0}, {0, 0}}), Error);
}

TEST_CASE("width_params examples") {
    const QuantumConstants c;
    const WidthParams s = width_params(ModeParams{}, c, 0.4);
    CHECK(s.zeta == doctest::Approx(1.0));
    CHECK(s.zetaPrime == complex{1.0, 0.0});

    const WidthParams g = width_params(gold(), c, 0.0);
    CHECK(g.zeta == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(g.zetaPrime.real() == g.zeta);
    CHECK(g.zetaPrime.imag() == doctest::Approx(-0.745356).epsilon(1e-6));

    const ModeParams m = make_mode(1.0, 1.5, 1.0);
    for (double tn : node_times(m, 0.0, 10.0)) CHECK(std::abs(width_params(m, c, tn).zetaPrime.imag()) < 1e-12);
}

TEST_CASE("hermite examples") {
    for (double x : {-2.0, 0.0, 3.5}) CHECK(hermite(0, x) == 1.0);
    CHECK(hermite(1, 3.0) == 6.0);
    CHECK(hermite(7, 1.0) == 464.0);
    CHECK(hermite(4, 0.5) == doctest::Approx(16 * 0.0625 - 48 * 0.25 + 12));
    CHECK_THROWS_AS(hermite(51, 1.0), Error);
    CHECK_THROWS_AS(hermite(-1, 1.0), Error);
}

TEST_CASE("hermite_function matches the polynomial form") {
    for (int n = 0; n <= 12; ++n)
        for (double x : {-3.0, -0.4, 0.0, 1.1, 2.7}) {
            double fact = 1.0;
            for (int k = 2; k <= n; ++k) fact *= k;
            const double direct = std::pow(kPi, -0.25) / std::sqrt(std::ldexp(fact, n)) * hermite(n, x) * std::exp(-x * x / 2);
            CHECK(hermite_function(n, x) == doctest::Approx(direct).epsilon(1e-12).scale(1e-3));
        }
    CHECK(std::isfinite(hermite_function(50, 9.0)));
}

TEST_CASE("eigenfunction examples") {
    const QuantumConstants c;
    CHECK(eigenfunction(0, 0.0, ModeParams{}, c, 0.0).real() == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-15));
    CHECK(eigenfunction(0, 0.0, ModeParams{}, c, 0.0).real() == doctest::Approx(0.751126).epsilon(1e-6));
    CHECK(std::abs(eigenfunction(1, 0.0, gold(), c, 0.8)) == 0.0);
    for (int n = 0; n <= 10; ++n)
        for (double t : {0.0, 0.9}) CHECK(norm_integral(n, gold(), c, t) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(eigenfunction(51, 0.0, gold(), c, 0.0), Error);
}

TEST_CASE("position variance of the ground state") {
    const QuantumConstants c{1.0, 2.0};
    const ModeParams m = make_mode(1.0, 1.5, 1.0, C3Branch::Negative);
    for (double t : {0.0, 0.5, 2.0}) {
        const double half = quadrature_half_width(0, width_params(m, c, t).zeta);
        quad::Options opt;
        opt.abs_tol = 1e-13;
        const double var = quad::integrate([&](double q) { return q * q * std::norm(eigenfunction(0, q, m, c, t)); },
                                           -half, half, opt).value;
        CHECK(var == doctest::Approx(eval_f(m, t) / (2 * 2.0 * m.omega)).epsilon(1e-9));
    }
}

TEST_CASE("direct and scaled routes agree below the switch index") {
    const WidthParams w{1.3, complex{1.3, 0.4}};
    for (int n = 0; n < kScaledRecurrenceIndex; ++n)
        for (double q : {-2.0, 0.0, 0.35, 1.7, 4.0}) {
            const complex a = eigenfunction_direct(n, q, w);
            const complex b = eigenfunction_scaled(n, q, w);
            CHECK(std::abs(a - b) <= 1e-12);
        }
}

TEST_CASE("high-index eigenfunctions stay normalized") {
    const QuantumConstants c;
    CHECK(norm_integral(40, gold(), c, 0.3) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm_integral(50, ModeParams{}, c, 0.0) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("wavefunction examples") {
    const QuantumConstants c;
    const ModeParams m = make_mode(1.0, 1.5, 1.0, C3Branch::Positive, 0.5);
    for (double q : {-1.0, 0.2, 2.0}) {
        const complex psi = wavefunction(3, q, m, c, phase_state(3), 0.5);
        const complex phi = eigenfunction(3, q, m, c, 0.5);
        CHECK(std::abs(psi - phi) <= 1e-15);
        const complex a = wavefunction(3, q, m, c, phase_state(3), 2.0);
        const complex b = wavefunction(3, q, m, c, PhaseState{3, 1.2, 0.7, 0.5}, 2.0);
        CHECK(std::norm(a) == doctest::Approx(std::norm(b)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(wavefunction(2, 0.0, m, c, phase_state(3), 1.0), Error);
}

TEST_CASE("superposition_density examples") {
    const QuantumConstants c;
    const ModeParams m = make_mode(1.0, 1.5, 1.0);
    const PhaseState s5 = phase_state(5), s8 = phase_state(8);

    const SuperpositionSpec pure{5, 8, {1.0, 0.0}, {0.0, 0.0}};
    for (double q : {-1.0, 0.3}) {
        const auto d = superposition_density(pure, q, m, c, s5, s8, 1.1);
        CHECK(d.total == doctest::Approx(std::norm(wavefunction(5, q, m, c, s5, 1.1))).epsilon(1e-14));
        CHECK(d.cross == 0.0);
    }

    const SuperpositionSpec fig{5, 8, {1 / std::sqrt(2.0), 0.0}, {0.5, 0.5}};
    const auto at0 = superposition_density(fig, 0.0, m, c, s5, s8, 1.1);
    CHECK(at0.total == doctest::Approx(0.5 * std::norm(eigenfunction(8, 0.0, m, c, 1.1))).epsilon(1e-14));
    CHECK(at0.cross == doctest::Approx(0.0));

    const double half = quadrature_half_width(8, width_params(m, c, 1.1).zeta);
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.initial_panels = 64;
    const double total = quad::integrate([&](double q) { return superposition_density(fig, q, m, c, s5, s8, 1.1).total; },
                                         -half, half, opt).value;
    const double cross = quad::integrate([&](double q) { return superposition_density(fig, q, m, c, s5, s8, 1.1).cross; },
                                         -half, half, opt).value;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(cross) <= 1e-9);

    CHECK_THROWS_AS(superposition_density(fig, 0.0, m, c, s8, s5, 1.0), Error);
}
