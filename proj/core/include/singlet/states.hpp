#pragma once

// Singlet and triplet two-spin states in vector and matrix (metric-spinor)
// form.

#include "singlet/spinor.hpp"

namespace singlet {

enum class Sign { Plus, Minus };

/// Eigenvector of sigma_axis with eigenvalue +1 or -1. Phase conventions:
/// z+ = (1,0), z- = (0,1), x+- = (1,+-1)/sqrt2, y+- = (1,+-i)/sqrt2.
Spinor eigenspinor(Axis axis, Sign sign);

/// A pair of orthonormal single-spin states.
struct OrthonormalBasis {
    Spinor plus;
    Spinor minus;

    static OrthonormalBasis of_axis(Axis axis);

    /// Max of |<plus|minus>|, | |plus|^2 - 1 |, | |minus|^2 - 1 |.
    double orthonormality_defect() const;
};

/// (0, 1, -1, 0)/sqrt2, the z-basis singlet every amplitude contract refers to.
TwoSpinState canonical_singlet();

/// (1/sqrt2)(psi_a+ (x) psi_a- - psi_a- (x) psi_a+).
TwoSpinState traditional_singlet(Axis axis);

/// (1/sqrt2)(K psi_- (x) psi_- + K psi_+ (x) psi_+).
///
/// Independent of the basis and of the phases of its vectors: the sum
/// over a complete set equals vec(i sigma_y)/sqrt2 exactly.
TwoSpinState generalized_singlet(const OrthonormalBasis& basis, double tol = kDefaultTolerance);

/// (1/sqrt2)(psi_a+ (x) psi_a- + psi_a- (x) psi_a+), zero spin projection on `axis`.
TwoSpinState triplet_zero(Axis axis);

/// (0, 1, 1, 0)/sqrt2
TwoSpinState triplet_z0();

/// g = [[0,1],[-1,0]]
Matrix2 metric_spinor();
Matrix2 singlet_matrix_form();
/// sigma_z / sqrt2. Reshapes to (1,0,0,-1)/sqrt2, the x-axis S=1, m=0 state.
Matrix2 triplet_matrix_form();

/// Applies D (x) D.
TwoSpinState rotate_two_spin(const TwoSpinState& state, const RotationSpec& spec,
                             double tol = kDefaultTolerance);
/// Same rotation in matrix form: D Psi D^T.
Matrix2 rotate_two_spin(const Matrix2& state, const RotationSpec& spec,
                        double tol = kDefaultTolerance);

/// Total spin squared S^2 = (s1 + s2)^2 with s = sigma/2 (units of hbar^2).
Matrix4 total_spin_squared();

/// <psi|op|psi>
Complex expectation(const Matrix4& op, const TwoSpinState& psi);

}  // namespace singlet
