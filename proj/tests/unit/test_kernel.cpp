#include "helpers.hpp"

#include "singlet/kernel.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <doctest.h>

#include <vector>

using namespace singlet;
using namespace testing;

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g;
    for (int i = 0; i < count; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (count - 1)));
    return g;
}

// Reference sine transform of a coordinate-space term by double-exponential
// quadrature, split at the oscillation period so each piece is smooth.
template <typename F>
double reference_fourier(F&& k_of_r, double p_mom, double hbar) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double period = 2 * kPi * hbar / p_mom;
    double total = 0.0;
    double prev = 0.0;
    for (int i = 1;; ++i) {
        const double hi = i * period / 2;
        const double piece =
            ts.integrate([&](double r) { return r * std::sin(p_mom * r / hbar) * k_of_r(r); }, prev, hi);
        total += piece;
        prev = hi;
        if (std::abs(piece) < 1e-18 * std::abs(total) && i > 4) break;
        if (i > 200000) break;
    }
    return 4 * kPi * hbar / p_mom * total;
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("matsubara frequencies") {
    CHECK(matsubara_freq(0, 1.0) == doctest::Approx(kPi).epsilon(1e-16));
    CHECK(matsubara_freq(1, 1.0) == doctest::Approx(3 * kPi).epsilon(1e-16));
    CHECK(matsubara_freq(0, 0.5) == doctest::Approx(kPi / 2).epsilon(1e-16));
    CHECK_THROWS_AS(matsubara_freq(0, 0.0), ValidationError);
    CHECK(matsubara_freq(-1, 1.0) == doctest::Approx(-kPi).epsilon(1e-16));
}

TEST_CASE("parameter validation") {
    CleanParams c;
    c.j = -0.1;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c = CleanParams{};
    c.v_f = 0.0;
    CHECK_THROWS_AS(c.validate(), ValidationError);
    DirtyParams d;
    d.d = -1.0;
    CHECK_THROWS_AS(d.validate(), ValidationError);
    d = DirtyParams{};
    d.t_c = 0.0;
    CHECK_THROWS_AS(d.validate(), ValidationError);
    CHECK_NOTHROW(DirtyParams{}.validate());
}

TEST_CASE("clean coordinate kernel") {
    CleanParams p{1.3, 0.7, 0.9, 1.7, 0.0, 1.1};
    const double pref = p.n0 * p.g_abs * p.t_c / (p.hbar * p.v_f);
    for (double R : {0.05, 0.4, 2.0}) {
        for (int n : {0, 1, 3}) {
            const double w = (2 * n + 1) * kPi * p.t_c;
            CHECK(rel_err(clean_kernel_term_r(R, n, p), pref / (R * R) * std::exp(-2 * w * R / (p.hbar * p.v_f))) < 1e-14);
        }
        CHECK(clean_kernel_term_r(R, 1, p) / clean_kernel_term_r(R, 0, p) ==
              doctest::Approx(std::exp(-4 * kPi * p.t_c * R / (p.hbar * p.v_f))).epsilon(1e-13));
    }

    p.j = 0.8;
    const double node = kPi * p.hbar * p.v_f / (4 * p.j);
    CHECK(std::abs(clean_spin_factor(node, p)) < 1e-15);
    CHECK(clean_kernel_term_r(0.9 * node, 0, p) > 0.0);
    CHECK(clean_kernel_term_r(1.1 * node, 0, p) < 0.0);
    for (double R : {0.1, 0.7, 3.3}) {
        const double s = std::sin(R * p.j / (p.hbar * p.v_f));
        CHECK(std::abs(clean_spin_factor(R, p) - (1 - 2 * s * s)) < 1e-15);
    }

    const double sum = clean_kernel_r(0.3, p, {2});
    CHECK(sum == doctest::Approx(clean_kernel_term_r(0.3, 0, p) + clean_kernel_term_r(0.3, 1, p) +
                                 clean_kernel_term_r(0.3, 2, p)));
    CHECK_THROWS_AS(clean_kernel_term_r(0.0, 0, p), ValidationError);
    CHECK_THROWS_AS(clean_kernel_term_r(-1.0, 0, p), ValidationError);
    CHECK_THROWS_AS(clean_kernel_r(1.0, p, {-1}), ValidationError);
}

TEST_CASE("clean momentum kernel") {
    CleanParams p;
    p.j = 0.0;
    const double w0 = kPi;
    CHECK(rel_err(clean_kernel_term_p(1.0, 0, p), 2 * kPi / 1.0 * 2 * std::atan(1.0 / (2 * w0))) < 1e-15);

    p.j = 0.6;
    const double pv = 2 * p.j;
    const double w1 = 3 * kPi;
    CHECK(rel_err(clean_kernel_term_p(pv / p.v_f, 1, p),
                  2 * kPi / pv * std::atan((pv + 2 * p.j) / (2 * w1))) < 1e-15);
    CHECK_THROWS_AS(clean_kernel_term_p(0.0, 0, p), ValidationError);

    // Truncated sums grow without bound as n_max increases.
    CHECK(clean_kernel_p(1.0, p, {200}) > clean_kernel_p(1.0, p, {20}) + 0.1);
}

TEST_CASE("dirty coordinate kernel") {
    DirtyParams p{1.1, 0.8, 0.7, 1.9, 0.0, 1.2};
    const double pref = p.n0 * p.g_abs * p.t_c / p.hbar / p.d;
    for (double R : {0.1, 1.0, 4.0}) {
        for (int n : {0, 2}) {
            const double w = (2 * n + 1) * kPi * p.t_c;
            CHECK(rel_err(dirty_kernel_term_r(R, n, p), pref / R * std::exp(-R * std::sqrt(2 * w / (p.hbar * p.d)))) <
                  1e-14);
            CHECK(dirty_spin_factor(R, n, p) == 1.0);
        }
    }

    p.j = 1.5;
    for (double R : {0.1, 1.0, 4.0}) {
        for (int n : {0, 2}) {
            const double w = (2 * n + 1) * kPi * p.t_c;
            const double mod = std::sqrt(w * w + p.j * p.j);
            const double s = std::sin(R / (2 * std::sqrt(p.hbar * p.d)) * std::sqrt(mod - w));
            const double expected =
                pref / R * (1 - 2 * s * s) * std::exp(-R / std::sqrt(p.hbar * p.d) * std::sqrt(mod + w));
            CHECK(std::abs(dirty_kernel_term_r(R, n, p) - expected) < 1e-13 * std::abs(pref / R));
        }
    }
    CHECK_THROWS_AS(dirty_kernel_term_r(0.0, 0, p), ValidationError);

    // Terms decay in n at J = 0.
    p.j = 0.0;
    for (int n = 0; n < 5; ++n) CHECK(dirty_kernel_term_r(0.5, n + 1, p) < dirty_kernel_term_r(0.5, n, p));
}

TEST_CASE("dirty momentum kernel") {
    DirtyParams p;
    p.j = 0.0;
    const double w0 = kPi;
    CHECK(rel_err(dirty_kernel_term_p(0.0, 0, p), 4 * kPi / (2 * w0)) < 1e-15);

    p.j = 0.7;
    const double x = 2 * w0;
    CHECK(rel_err(dirty_kernel_term_p_literature(0.0, 0, p), 2 * x / (x * x + 4 * p.j * p.j)) < 1e-15);
    for (double pm : {0.0, 0.3, 5.0}) {
        CHECK(rel_err(dirty_kernel_term_p(pm, 1, p) / dirty_kernel_term_p_literature(pm, 1, p), 2 * kPi) < 1e-15);
    }
    CHECK_THROWS_AS(dirty_kernel_term_p(-1.0, 0, p), ValidationError);

    // At J = 0, p -> 0 both limits give 2 pi N(0)|g| T_c / w_n.
    CleanParams c;
    DirtyParams d;
    for (int n : {0, 1, 4}) {
        const double w = matsubara_freq(n, 1.0);
        CHECK(rel_err(dirty_kernel_term_p(0.0, n, d), 2 * kPi / w) < 1e-15);
        CHECK(rel_err(clean_kernel_term_p(1e-7, n, c), 2 * kPi / w) < 1e-12);
    }
}

TEST_CASE("dirty momentum kernel is the Fourier partner of the coordinate kernel") {
    // Independent double-exponential transform of the coordinate term.
    DirtyParams p;
    for (double J : {0.0, 1.0}) {
        p.j = J;
        for (double pm : {0.2, 1.0, 4.0}) {
            const double ref = reference_fourier([&](double r) { return dirty_kernel_term_r(r, 0, p); }, pm, p.hbar);
            CHECK(rel_err(dirty_kernel_term_p(pm, 0, p), ref) < 1e-7);
        }
    }
}

TEST_CASE("sine transform identity behind the clean momentum kernel") {
    boost::math::quadrature::exp_sinh<double> es;
    for (double a : {0.5, 2.0}) {
        for (double b : {0.0, 0.7}) {
            for (double c : {0.3, 1.5}) {
                double err = 0.0;
                const double lhs = es.integrate(
                    [&](double r) { return std::exp(-a * r) * std::sin(c * r) * std::cos(b * r) / r; }, 1e-12, &err);
                const double rhs = 0.5 * (std::atan((c + b) / a) + std::atan((c - b) / a));
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("Laplace identity behind the dirty coordinate kernel") {
    boost::math::quadrature::exp_sinh<double> es;
    for (double a : {0.3, 2.0, 9.0}) {
        for (double b : {0.1, 1.0, 5.0}) {
            const double lhs =
                es.integrate([&](double t) { return std::pow(t, -1.5) * std::exp(-a * t - b / t); }, 1e-13);
            const double rhs = std::sqrt(kPi / b) * std::exp(-2 * std::sqrt(a * b));
            CHECK(rel_err(lhs, rhs) < 1e-10);
        }
    }
}

TEST_CASE("clean shell collapse reproduces the coordinate kernel") {
    for (double J : {0.0, 0.5, 2.0}) {
        CleanParams p;
        p.j = J;
        for (int n : {0, 1, 2, 5}) {
            for (double R : log_grid(0.01, 3.0, 50)) {
                const double ref = clean_kernel_term_r(R, n, p);
                CHECK(rel_err(laplace_term_clean(R, n, p), ref) < 1e-14);
            }
        }
    }
}

TEST_CASE("dirty Laplace reconstruction") {
    const QuadratureConfig quad;
    DirtyParams p;
    p.j = 0.0;
    for (double R : {0.05, 0.5, 3.0}) {
        const double w = kPi;
        const double closed = 1.0 / R * std::exp(-R * std::sqrt(2 * w));
        CHECK(rel_err(laplace_term_dirty(R, 0, p, quad).value, closed) < 1e-8);
    }
    for (double J : {0.5, 2.0}) {
        p.j = J;
        for (int n : {0, 1, 2}) {
            for (double R : log_grid(0.02, 8.0, 12)) {
                const QuadratureResult r = laplace_term_dirty(R, n, p, quad);
                CHECK(rel_err(r.value, dirty_kernel_term_r(R, n, p)) < 1e-8);
                CHECK(r.error_estimate >= 0.0);
            }
        }
    }
    CHECK_THROWS_AS(laplace_term_dirty(0.0, 0, p, quad), ValidationError);
}

TEST_CASE("radial Fourier transforms match the momentum closed forms") {
    const QuadratureConfig quad;
    CleanParams c;
    CHECK(rel_err(radial_fourier_term_clean(0, 1.0, c, quad).value, 2 * kPi * 2 * std::atan(1 / (2 * kPi))) < 1e-6);
    c.j = 0.5;
    DirtyParams d;
    d.j = 1.0;
    CHECK(rel_err(radial_fourier_term_dirty(0, 1.0, d, quad).value, dirty_kernel_term_p(1.0, 0, d)) < 1e-6);
    for (int n : {0, 2, 5}) {
        for (double pm : log_grid(0.01, 100.0, 7)) {
            CHECK(rel_err(radial_fourier_term_clean(n, pm, c, quad).value, clean_kernel_term_p(pm, n, c)) < 1e-6);
            CHECK(rel_err(radial_fourier_term_dirty(n, pm, d, quad).value, dirty_kernel_term_p(pm, n, d)) < 1e-6);
        }
    }
    CHECK_THROWS_AS(radial_fourier_term_clean(0, 0.0, c, quad), ValidationError);
}

TEST_CASE("impossible tolerances surface as quadrature errors") {
    QuadratureConfig quad;
    quad.rel_tol = 1e-20;
    DirtyParams d;
    d.j = 0.5;
    CHECK_THROWS_AS(laplace_term_dirty(1.0, 0, d, quad), QuadratureError);
    CHECK_THROWS_AS(radial_fourier_term_clean(0, 1.0, CleanParams{}, quad), QuadratureError);
    try {
        radial_fourier_term_dirty(0, 1.0, d, quad);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.error_estimate() > 0.0);
        CHECK(std::isfinite(e.value()));
    }
}

}  // TEST_SUITE
