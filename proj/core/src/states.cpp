#include "singlet/states.hpp"

#include <cmath>

namespace singlet {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr Complex kI{0.0, 1.0};
}  // namespace

Spinor eigenspinor(Axis axis, Sign sign) {
    const double s = sign == Sign::Plus ? 1.0 : -1.0;
    switch (axis) {
        case Axis::X: return Spinor{{kInvSqrt2, s * kInvSqrt2}};
        case Axis::Y: return Spinor{{kInvSqrt2, s * kInvSqrt2 * kI}};
        case Axis::Z: return sign == Sign::Plus ? Spinor{{1.0, 0.0}} : Spinor{{0.0, 1.0}};
    }
    return {};
}

OrthonormalBasis OrthonormalBasis::of_axis(Axis axis) {
    return {eigenspinor(axis, Sign::Plus), eigenspinor(axis, Sign::Minus)};
}

double OrthonormalBasis::orthonormality_defect() const {
    return std::max({std::abs(inner(plus, minus)), std::abs(plus.norm2() - 1.0),
                     std::abs(minus.norm2() - 1.0)});
}

TwoSpinState canonical_singlet() { return TwoSpinState{{0.0, kInvSqrt2, -kInvSqrt2, 0.0}}; }

TwoSpinState traditional_singlet(Axis axis) {
    const Spinor p = eigenspinor(axis, Sign::Plus);
    const Spinor m = eigenspinor(axis, Sign::Minus);
    return Complex(kInvSqrt2) * (kron(p, m) - kron(m, p));
}

TwoSpinState generalized_singlet(const OrthonormalBasis& basis, double tol) {
    if (!(basis.orthonormality_defect() <= tol)) {
        throw ValidationError("generalized_singlet: basis is not orthonormal");
    }
    const AntiunitaryOp k = time_reversal();
    return Complex(kInvSqrt2) *
           (kron(k(basis.minus), basis.minus) + kron(k(basis.plus), basis.plus));
}

TwoSpinState triplet_zero(Axis axis) {
    const Spinor p = eigenspinor(axis, Sign::Plus);
    const Spinor m = eigenspinor(axis, Sign::Minus);
    return Complex(kInvSqrt2) * (kron(p, m) + kron(m, p));
}

TwoSpinState triplet_z0() { return TwoSpinState{{0.0, kInvSqrt2, kInvSqrt2, 0.0}}; }

Matrix2 metric_spinor() { return time_reversal().unitary_part(); }

Matrix2 singlet_matrix_form() { return Complex(kInvSqrt2) * metric_spinor(); }

Matrix2 triplet_matrix_form() { return Complex(kInvSqrt2) * pauli(Axis::Z); }

TwoSpinState rotate_two_spin(const TwoSpinState& state, const RotationSpec& spec, double tol) {
    const Matrix2 d = rotation_matrix(spec, tol);
    return kron(d, d) * state;
}

Matrix2 rotate_two_spin(const Matrix2& state, const RotationSpec& spec, double tol) {
    const Matrix2 d = rotation_matrix(spec, tol);
    return d * state * d.transpose();
}

Matrix4 total_spin_squared() {
    Matrix4 s2;
    const Matrix2 id = Matrix2::identity();
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const Matrix2 s = Complex(0.5) * pauli(a);
        const Matrix4 total = kron(s, id) + kron(id, s);
        s2 = s2 + total * total;
    }
    return s2;
}

Complex expectation(const Matrix4& op, const TwoSpinState& psi) { return inner(psi, op * psi); }

}  // namespace singlet
