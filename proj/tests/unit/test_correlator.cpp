#include "helpers.hpp"

#include "singlet/correlator.hpp"
#include "singlet/quadrature.hpp"
#include "singlet/spinor.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <doctest.h>

using namespace singlet;
using namespace testing;

TEST_SUITE("correlator") {

TEST_CASE("ballistic shell") {
    const DeltaShell s = clean_correlator(2.0, 3.0);
    CHECK(s.radius == 6.0);
    CHECK(s.surface_weight == doctest::Approx(1.0 / (4 * kPi * 36.0)).epsilon(1e-15));
    CHECK_THROWS_AS(clean_correlator(0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(clean_correlator(1.0, -1.0), ValidationError);
}

TEST_CASE("diffusive propagator") {
    const double t = 0.7;
    const double d = 1.3;
    CHECK(dirty_correlator(0.0, t, d) == doctest::Approx(std::pow(4 * kPi * d * t, -1.5)).epsilon(1e-15));

    boost::math::quadrature::exp_sinh<double> es;
    // Cut off where the Gaussian underflows so r^2 * 0 is never inf * 0.
    auto shell = [&](double r, int power) { return r > 60.0 ? 0.0 : 4 * kPi * std::pow(r, power) * dirty_correlator(r, t, d); };
    const double mass = es.integrate([&](double r) { return shell(r, 2); }, 1e-14);
    CHECK(std::abs(mass - 1.0) < 1e-9);

    const double second = es.integrate([&](double r) { return shell(r, 4); }, 1e-14);
    CHECK(second == doctest::Approx(6 * d * t).epsilon(1e-9));

    CHECK_THROWS_AS(dirty_correlator(1.0, 0.0, d), ValidationError);
    CHECK_THROWS_AS(dirty_correlator(1.0, -1.0, d), ValidationError);
    CHECK_THROWS_AS(dirty_correlator(-1.0, 1.0, d), ValidationError);
}

TEST_CASE("pair correlation follows the singlet amplitude") {
    const double J = 1.0;
    const double hbar = 1.0;
    const double R = 0.8;
    const double d = 1.0;
    CHECK(std::abs(pair_correlation_dirty(R, kPi / 4, d, J, hbar)) < 1e-15);
    for (double t : {0.9, 1.2, 2.0}) CHECK(pair_correlation_dirty(R, t, d, J, hbar) < 0.0);
    CHECK(pair_correlation_dirty(R, 0.3, d, J, hbar) > 0.0);
    CHECK(pair_correlation_dirty(R, 1.5, d, 0.0, hbar) == doctest::Approx(2 * dirty_correlator(R, 1.5, d)).epsilon(1e-15));

    for (double t : {0.1, 0.5, 1.7, 3.3}) {
        const double f = pair_correlation_dirty(R, t, d, J, hbar);
        CHECK(f == doctest::Approx(2 * dirty_correlator(R, t, d) * std::cos(2 * J * t / hbar)).epsilon(1e-12));
    }

    const DeltaShell shell = pair_correlation_clean(0.5, 2.0, J, hbar);
    CHECK(shell.radius == 1.0);
    CHECK(shell.surface_weight ==
          doctest::Approx(2 * std::cos(1.0) * clean_correlator(0.5, 2.0).surface_weight).epsilon(1e-14));
}

TEST_CASE("four-term decomposition sums to the compact form") {
    for (double c : {0.0, 1e-300, 0.37, 12.5}) {
        for (double a : {1.0, 0.3, -0.7, 0.0, -1.0}) {
            const FourTermDecomposition four = four_term_decomposition(c, a, a);
            for (double term : four.terms) CHECK(term == four.terms[0]);
            CHECK(four.sum() == 2 * c * a);
        }
    }
    const FourTermDecomposition split = four_term_decomposition(1.0, 0.5, -0.5);
    CHECK(split.terms[0] == 0.25);
    CHECK(split.terms[1] == -0.25);

    for (double t = 0.05; t < 6.0; t += 0.173) {
        CHECK_NOTHROW(pair_correlation_dirty(1.1, t, 0.4, 2.3, 1.0));
    }
}

}  // TEST_SUITE

TEST_SUITE("quadrature") {

TEST_CASE("polynomials and smooth functions") {
    const QuadratureConfig cfg;
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0, cfg).value == doctest::Approx(9.0).epsilon(1e-15));
    const QuadratureResult r = integrate([](double x) { return std::exp(-x) * std::cos(20 * x); }, 0.0, 10.0, cfg);
    const double exact = (1 - std::exp(-10.0) * (std::cos(200.0) - 20 * std::sin(200.0))) / 401.0;
    CHECK(rel_err(r.value, exact) < 1e-12);
    CHECK(r.intervals >= 1);
    CHECK(r.error_estimate <= cfg.rel_tol * std::abs(r.value));
}

TEST_CASE("endpoint singularities are handled by subdivision") {
    const QuadratureConfig cfg;
    const QuadratureResult r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg);
    CHECK(rel_err(r.value, 2.0) < 1e-9);
}

TEST_CASE("zero integrals converge through the absolute tolerance") {
    const QuadratureConfig cfg;
    CHECK(std::abs(integrate([](double x) { return std::sin(x); }, -2.0, 2.0, cfg).value) < 1e-12);
    CHECK(integrate([](double) { return 0.0; }, 0.0, 1.0, cfg).value == 0.0);
}

TEST_CASE("configuration and bounds are validated") {
    QuadratureConfig cfg;
    cfg.rel_tol = 0.0;
    CHECK_THROWS(integrate([](double x) { return x; }, 0.0, 1.0, cfg));
    cfg = QuadratureConfig{};
    cfg.max_intervals = 0;
    CHECK_THROWS(integrate([](double x) { return x; }, 0.0, 1.0, cfg));
    CHECK_THROWS(integrate([](double x) { return x; }, 0.0, std::numeric_limits<double>::infinity(), QuadratureConfig{}));
}

TEST_CASE("exhausted budget reports the achieved estimate") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-20;
    cfg.abs_tol = 1e-300;
    cfg.max_intervals = 50;
    try {
        integrate([](double x) { return std::sin(50 * x) * std::exp(-x); }, 0.0, 20.0, cfg);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.error_estimate() > 0.0);
        CHECK(std::string(e.what()).find("no convergence") != std::string::npos);
    }
}

}  // TEST_SUITE
