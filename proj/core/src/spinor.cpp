#include "singlet/spinor.hpp"

#include <cmath>

namespace singlet {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Matrix2 pauli(Axis axis) {
    Matrix2 m;
    switch (axis) {
        case Axis::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::Y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case Axis::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

TwoSpinState kron(const Spinor& u, const Spinor& v) {
    TwoSpinState r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = u[i] * v[j];
    return r;
}

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

Matrix2 sigma_dot(const Vec3& n) {
    return Complex(n.x) * pauli(Axis::X) + Complex(n.y) * pauli(Axis::Y) +
           Complex(n.z) * pauli(Axis::Z);
}

Matrix2 unitary_exp(const Matrix2& h, double tau, double tol) {
    if (!(hermiticity_defect(h) <= tol)) {
        throw ValidationError("unitary_exp: generator is not Hermitian");
    }
    const double h0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const Vec3 v{h(0, 1).real(), -h(0, 1).imag(), 0.5 * (h(0, 0).real() - h(1, 1).real())};
    const double len = v.norm();
    const Complex phase = std::exp(Complex(0.0, -h0 * tau));
    Matrix2 r = Complex(std::cos(len * tau)) * Matrix2::identity();
    if (len > 0.0) {
        const Vec3 unit{v.x / len, v.y / len, v.z / len};
        r = r - (kI * std::sin(len * tau)) * sigma_dot(unit);
    }
    return phase * r;
}

Matrix2 rotation_matrix(const RotationSpec& spec, double tol) {
    if (!(std::abs(spec.axis.norm() - 1.0) <= tol)) {
        throw ValidationError("rotation axis must be a unit vector, |m| = " +
                              std::to_string(spec.axis.norm()));
    }
    if (!std::isfinite(spec.angle)) throw ValidationError("rotation angle must be finite");
    const double half = 0.5 * spec.angle;
    return Complex(std::cos(half)) * Matrix2::identity() +
           (kI * std::sin(half)) * sigma_dot(spec.axis);
}

AntiunitaryOp::AntiunitaryOp(const Matrix2& unitary_part, double tol) : m_(unitary_part) {
    if (!(unitarity_defect(m_) <= tol)) {
        throw ValidationError("antiunitary operator requires a unitary matrix part");
    }
}

AntiunitaryOp AntiunitaryOp::adjoint() const { return AntiunitaryOp(m_.transpose()); }

AntiunitaryOp time_reversal() {
    Matrix2 m;
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    return AntiunitaryOp(m);
}

Matrix2 compose(const AntiunitaryOp& a, const AntiunitaryOp& b) {
    return a.unitary_part() * b.unitary_part().conj();
}

Matrix2 sandwich(const AntiunitaryOp& a, const Matrix2& h, double tol) {
    if (!(hermiticity_defect(h) <= tol)) {
        throw ValidationError("sandwich: operator is not Hermitian");
    }
    const Matrix2& m = a.unitary_part();
    return m * h.conj() * m.adjoint();
}

Matrix2 to_matrix(const TwoSpinState& state) {
    Matrix2 m;
    for (std::size_t k = 0; k < 4; ++k) m.a[k] = state[k];
    return m;
}

TwoSpinState to_vector(const Matrix2& m) {
    TwoSpinState s;
    for (std::size_t k = 0; k < 4; ++k) s[k] = m.a[k];
    return s;
}

TwoSpinState swap_spins(const TwoSpinState& state) {
    return TwoSpinState{{state[0], state[2], state[1], state[3]}};
}

std::string to_string(Axis axis) {
    switch (axis) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

}  // namespace singlet
