#pragma once

// Dense complex linear algebra for one- and two-spin operators.
//
// Everything here is fixed-size (2 and 4 components), value-typed and
// immutable once built. Two-spin vectors use the index convention
// component(2*i + j) = u_i * v_j for u (spin 1, left factor) and v (spin 2).

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlet {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-12;

/// Raised when an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computation routes disagree. Signals a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <std::size_t N>
struct CVector {
    std::array<Complex, N> c{};

    constexpr Complex& operator[](std::size_t i) { return c[i]; }
    constexpr const Complex& operator[](std::size_t i) const { return c[i]; }

    double norm2() const {
        double s = 0.0;
        for (const auto& x : c) s += std::norm(x);
        return s;
    }

    CVector conj() const {
        CVector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = std::conj(c[i]);
        return r;
    }

    friend CVector operator+(const CVector& a, const CVector& b) {
        CVector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend CVector operator-(const CVector& a, const CVector& b) {
        CVector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend CVector operator*(Complex s, const CVector& a) {
        CVector r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend bool operator==(const CVector&, const CVector&) = default;
};

using Spinor = CVector<2>;
using TwoSpinState = CVector<4>;

/// <a|b>, antilinear in the first argument.
template <std::size_t N>
Complex inner(const CVector<N>& a, const CVector<N>& b) {
    Complex s{};
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a.c[i]) * b.c[i];
    return s;
}

template <std::size_t N>
double max_abs_diff(const CVector<N>& a, const CVector<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
    return m;
}

/// Row-major N x N complex matrix.
template <std::size_t N>
struct CMatrix {
    std::array<Complex, N * N> a{};

    constexpr Complex& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
    constexpr const Complex& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

    static CMatrix identity() {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMatrix diagonal(const std::array<Complex, N>& d) {
        CMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    CMatrix transpose() const {
        CMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    CMatrix conj() const {
        CMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.a[k] = std::conj(a[k]);
        return r;
    }
    CMatrix adjoint() const { return transpose().conj(); }

    Complex trace() const {
        Complex s{};
        for (std::size_t i = 0; i < N; ++i) s += (*this)(i, i);
        return s;
    }

    friend CMatrix operator+(const CMatrix& x, const CMatrix& y) {
        CMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.a[k] = x.a[k] + y.a[k];
        return r;
    }
    friend CMatrix operator-(const CMatrix& x, const CMatrix& y) {
        CMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.a[k] = x.a[k] - y.a[k];
        return r;
    }
    friend CMatrix operator*(Complex s, const CMatrix& x) {
        CMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.a[k] = s * x.a[k];
        return r;
    }
    friend CMatrix operator*(const CMatrix& x, const CMatrix& y) {
        CMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex xik = x(i, k);
                for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }
    friend CVector<N> operator*(const CMatrix& x, const CVector<N>& v) {
        CVector<N> r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r.c[i] += x(i, j) * v.c[j];
        return r;
    }
    friend bool operator==(const CMatrix&, const CMatrix&) = default;
};

using Matrix2 = CMatrix<2>;
using Matrix4 = CMatrix<4>;

template <std::size_t N>
double max_abs_diff(const CMatrix<N>& x, const CMatrix<N>& y) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(x.a[k] - y.a[k]));
    return m;
}

/// max |M^dagger M - I|
template <std::size_t N>
double unitarity_defect(const CMatrix<N>& m) {
    return max_abs_diff(m.adjoint() * m, CMatrix<N>::identity());
}

template <std::size_t N>
double hermiticity_defect(const CMatrix<N>& m) {
    return max_abs_diff(m, m.adjoint());
}

enum class Axis { X, Y, Z };

Matrix2 pauli(Axis axis);

Matrix4 kron(const Matrix2& a, const Matrix2& b);
TwoSpinState kron(const Spinor& u, const Spinor& v);

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

/// Rotation by `angle` (radians) about the unit vector `axis`.
struct RotationSpec {
    Vec3 axis;
    double angle = 0.0;
};

/// n . sigma
Matrix2 sigma_dot(const Vec3& n);

/// exp(-i H tau) for Hermitian H, via H = h0 I + h.sigma and the closed form
/// e^{-i h0 tau} (cos(|h| tau) I - i sin(|h| tau) h^.sigma).
Matrix2 unitary_exp(const Matrix2& h, double tau, double tol = kDefaultTolerance);

/// D(m; phi) = cos(phi/2) I + i sin(phi/2) (m . sigma). Throws ValidationError
/// if |m| deviates from 1 by more than `tol`.
Matrix2 rotation_matrix(const RotationSpec& spec, double tol = kDefaultTolerance);

/// Antiunitary operator A(psi) = M * conj(psi).
///
/// Products of two antiunitaries are linear; `compose` returns that linear
/// operator as a plain matrix.
class AntiunitaryOp {
public:
    explicit AntiunitaryOp(const Matrix2& unitary_part, double tol = kDefaultTolerance);

    const Matrix2& unitary_part() const { return m_; }

    Spinor apply(const Spinor& psi) const { return m_ * psi.conj(); }
    Spinor operator()(const Spinor& psi) const { return apply(psi); }

    /// A^+ with unitary part M^T, so that A^+ o A is the identity map.
    AntiunitaryOp adjoint() const;

private:
    Matrix2 m_;
};

/// Canonical time reversal K with unitary part i*sigma_y = [[0,1],[-1,0]].
/// K(1,0) = (0,-1) and K(0,1) = (1,0).
AntiunitaryOp time_reversal();

/// The linear map A o B, i.e. M_A * conj(M_B).
Matrix2 compose(const AntiunitaryOp& a, const AntiunitaryOp& b);

/// Linear operator A H A^+ = M conj(H) M^dagger. H must be Hermitian.
Matrix2 sandwich(const AntiunitaryOp& a, const Matrix2& h, double tol = kDefaultTolerance);

/// Two-spin vector <-> 2x2 matrix with element (i, j) = component(2*i + j).
Matrix2 to_matrix(const TwoSpinState& state);
TwoSpinState to_vector(const Matrix2& m);

/// Exchange of the tensor factors: component(2i+j) -> component(2j+i).
TwoSpinState swap_spins(const TwoSpinState& state);

std::string to_string(Axis axis);

}  // namespace singlet
