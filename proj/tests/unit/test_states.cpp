#include "helpers.hpp"

#include "singlet/sampling.hpp"
#include "singlet/states.hpp"

#include <doctest.h>

#include <random>

using namespace singlet;
using namespace testing;

namespace {

const TwoSpinState kSinglet = state(0, 1 / kRt2, -1 / kRt2, 0);

// Direct expansion (1/sqrt2)(u+ (x) u- - u- (x) u+) without the library kron.
TwoSpinState antisymmetrize(const Spinor& p, const Spinor& m) {
    TwoSpinState out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[2 * i + j] = (p[i] * m[j] - m[i] * p[j]) / kRt2;
    return out;
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("eigenspinors") {
    CHECK(eigenspinor(Axis::Z, Sign::Plus) == Spinor{{1, 0}});
    CHECK(eigenspinor(Axis::Z, Sign::Minus) == Spinor{{0, 1}});
    CHECK(max_abs_diff(eigenspinor(Axis::X, Sign::Minus), Spinor{{1 / kRt2, -1 / kRt2}}) < 1e-16);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            const Spinor psi = eigenspinor(a, s);
            const double lambda = s == Sign::Plus ? 1.0 : -1.0;
            CHECK(max_abs_diff(pauli(a) * psi, Complex(lambda) * psi) < 1e-15);
            CHECK(std::abs(psi.norm2() - 1.0) < 1e-15);
        }
        CHECK(OrthonormalBasis::of_axis(a).orthonormality_defect() < 1e-15);
    }
}

TEST_CASE("traditional singlet") {
    CHECK(max_abs_diff(traditional_singlet(Axis::Z), kSinglet) < 1e-16);
    CHECK(max_abs_diff(traditional_singlet(Axis::X), Complex(-1) * kSinglet) < 1e-15);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const TwoSpinState s = traditional_singlet(a);
        CHECK(max_abs_diff(s, antisymmetrize(eigenspinor(a, Sign::Plus), eigenspinor(a, Sign::Minus))) < 1e-16);
        CHECK(std::abs(s.norm2() - 1.0) < 1e-15);
        CHECK(std::abs(expectation(total_spin_squared(), s)) < 1e-12);
        // Equal to the generalized form up to a unit phase.
        const Complex overlap = inner(s, generalized_singlet(OrthonormalBasis::of_axis(a)));
        CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-13);
    }
}

TEST_CASE("generalized singlet is basis independent") {
    CHECK(max_abs_diff(generalized_singlet(OrthonormalBasis::of_axis(Axis::Z)), kSinglet) < 1e-16);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    const OrthonormalBasis x = OrthonormalBasis::of_axis(Axis::X);
    for (int i = 0; i < 100; ++i) {
        const OrthonormalBasis phased{std::polar(1.0, phase(rng)) * x.plus,
                                      std::polar(1.0, phase(rng)) * x.minus};
        CHECK(max_abs_diff(generalized_singlet(phased), kSinglet) < 1e-14);
    }

    // Completeness: sum_s K psi_s (x) psi_s reshapes to i sigma_y for any basis.
    const Matrix2 i_sigma_y = kI * pauli(Axis::Y);
    for (int i = 0; i < 1000; ++i) {
        const OrthonormalBasis b = random_basis(rng);
        const TwoSpinState g = generalized_singlet(b);
        CHECK(max_abs_diff(g, kSinglet) < 1e-13);
        CHECK(max_abs_diff(to_matrix(g), Complex(1 / kRt2) * i_sigma_y) < 1e-13);
    }
}

TEST_CASE("generalized singlet rejects bad bases") {
    const OrthonormalBasis skew{{{1, 0}}, {{1 / kRt2, 1 / kRt2}}};
    CHECK_THROWS_AS(generalized_singlet(skew), ValidationError);
    const OrthonormalBasis long_vec{{{2, 0}}, {{0, 1}}};
    CHECK_THROWS_AS(generalized_singlet(long_vec), ValidationError);
}

TEST_CASE("triplet component") {
    const TwoSpinState t = triplet_z0();
    CHECK(max_abs_diff(t, state(0, 1 / kRt2, 1 / kRt2, 0)) < 1e-16);
    CHECK(swap_spins(t) == t);
    CHECK(swap_spins(kSinglet) == Complex(-1) * kSinglet);
    CHECK(std::abs(inner(kSinglet, t)) == 0.0);

    const Matrix4 sz_total = kron(pauli(Axis::Z), Matrix2::identity()) + kron(Matrix2::identity(), pauli(Axis::Z));
    CHECK(max_abs_diff(sz_total * t, TwoSpinState{}) == 0.0);
    CHECK(std::abs(expectation(total_spin_squared(), t) - 2.0) < 1e-12);
}

TEST_CASE("metric spinor and matrix forms") {
    const Matrix2 g = metric_spinor();
    CHECK(g == mat(0, 1, -1, 0));
    CHECK(g.adjoint() == Complex(-1) * g);
    CHECK(g.transpose() == Complex(-1) * g);
    CHECK(g * g.adjoint() == Matrix2::identity());  // g^+ = g^-1
    CHECK(std::abs(-0.5 * (g * g).trace() - 1.0) == 0.0);

    const Matrix2 s = singlet_matrix_form();
    CHECK(std::abs((s.adjoint() * s).trace() - 1.0) < 1e-15);
    CHECK(max_abs_diff(to_vector(s), kSinglet) < 1e-16);

    // sigma_z / sqrt2 is the S = 1 member with zero spin along x.
    const TwoSpinState t = to_vector(triplet_matrix_form());
    CHECK(max_abs_diff(t, state(1 / kRt2, 0, 0, -1 / kRt2)) < 1e-16);
    const Complex overlap = inner(triplet_zero(Axis::X), t);
    CHECK(std::abs(std::abs(overlap) - 1.0) < 1e-15);
    CHECK(max_abs_diff(triplet_zero(Axis::Z), triplet_z0()) < 1e-16);
}

TEST_CASE("rotations of two-spin states") {
    CHECK(max_abs_diff(rotate_two_spin(kSinglet, {{0, 0, 1}, 1.234}), kSinglet) < 1e-14);

    std::mt19937_64 rng(33);
    for (int i = 0; i < 1000; ++i) {
        const RotationSpec r = random_rotation(rng);
        CHECK(max_abs_diff(rotate_two_spin(kSinglet, r), kSinglet) < 1e-13);
        CHECK(max_abs_diff(rotate_two_spin(singlet_matrix_form(), r), singlet_matrix_form()) < 1e-13);

        // The matrix form D Psi D^T agrees with D (x) D on the vector form.
        const TwoSpinState t = triplet_z0();
        CHECK(max_abs_diff(to_vector(rotate_two_spin(to_matrix(t), r)), rotate_two_spin(t, r)) < 1e-14);
    }

    const TwoSpinState t = triplet_z0();
    // A half turn about x maps this member to minus itself.
    CHECK(max_abs_diff(rotate_two_spin(t, {{1, 0, 0}, kPi}), Complex(-1) * t) < 1e-15);
    const TwoSpinState tilted = rotate_two_spin(t, {{0, 1, 0}, kPi / 2});
    CHECK(std::abs(inner(t, tilted)) < 1e-15);

    CHECK_THROWS_AS(rotate_two_spin(kSinglet, {{0, 2, 0}, 1.0}), ValidationError);
    CHECK_THROWS_AS(rotate_two_spin(singlet_matrix_form(), {{0, 0, 0.5}, 1.0}), ValidationError);
}

}  // TEST_SUITE
