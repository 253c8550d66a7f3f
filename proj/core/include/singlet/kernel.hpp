#pragma once

// Pair-propagation kernels of a ferromagnetic superconductor near T_c.
//
// Closed forms in coordinate (R = |r - r'|) and momentum space for the clean
// and dirty limits, a reconstruction of the coordinate kernels as a time
// Laplace transform of the classical pair correlation, and the radial Fourier
// transform linking the two representations:
//
//   K(p) = (4 pi hbar / p) Int_0^inf dR R sin(pR/hbar) K(R).
//
// Every Matsubara sum runs over n = 0..n_max explicitly. The momentum-space
// sums diverge logarithmically without a cutoff, so identities between the
// representations are checked term by term.

#include "singlet/correlator.hpp"
#include "singlet/quadrature.hpp"

#include <vector>

namespace singlet {

struct CleanParams {
    double n0 = 1.0;     ///< density of states N(0)
    double g_abs = 1.0;  ///< |g|
    double t_c = 1.0;    ///< T_c (energy units)
    double v_f = 1.0;    ///< Fermi velocity
    double j = 0.0;      ///< exchange field J >= 0
    double hbar = 1.0;

    void validate() const;
};

struct DirtyParams {
    double n0 = 1.0;
    double g_abs = 1.0;
    double t_c = 1.0;
    double d = 1.0;  ///< diffusion coefficient D = v_F l / 3
    double j = 0.0;
    double hbar = 1.0;

    void validate() const;
};

struct MatsubaraCutoff {
    int n_max = 0;
};

/// (2n+1) pi T_c
double matsubara_freq(int n, double t_c);

// Clean limit.

/// cos(2RJ / hbar v_F), written 1 - 2 sin^2(RJ / hbar v_F) in the literature.
double clean_spin_factor(double R, const CleanParams& p);
double clean_kernel_term_r(double R, int n, const CleanParams& p);
double clean_kernel_r(double R, const CleanParams& p, MatsubaraCutoff cutoff);
double clean_kernel_term_p(double p_mom, int n, const CleanParams& p);
double clean_kernel_p(double p_mom, const CleanParams& p, MatsubaraCutoff cutoff);

// Dirty limit.

/// cos(R sqrt(sqrt(w^2 + J^2) - w) / sqrt(hbar D))
double dirty_spin_factor(double R, int n, const DirtyParams& p);
double dirty_kernel_term_r(double R, int n, const DirtyParams& p);
double dirty_kernel_r(double R, const DirtyParams& p, MatsubaraCutoff cutoff);

/// 4 pi N(0)|g| T_c X / (X^2 + 4J^2), X = 2 w_n + D p^2 / hbar.
///
/// This prefactor makes the term the exact Fourier partner of
/// dirty_kernel_term_r and reproduces the clean value 2 pi N(0)|g|T_c / w_n
/// at p = 0, J = 0. The frequently quoted form with 2 N(0)|g| T_c is smaller
/// by 2 pi; see dirty_kernel_term_p_literature.
double dirty_kernel_term_p(double p_mom, int n, const DirtyParams& p);
double dirty_kernel_p(double p_mom, const DirtyParams& p, MatsubaraCutoff cutoff);

/// The form with prefactor 2 N(0)|g| T_c; dirty_kernel_term_p is 2 pi times this.
double dirty_kernel_term_p_literature(double p_mom, int n, const DirtyParams& p);

// Reconstruction from the classical correlators.

/// (2 pi N(0)|g| T_c / hbar) Int_0^inf dt exp(-2 w_n t / hbar) f(R, t).
///
/// Clean: the delta shell is integrated analytically (t = R / v_F, Jacobian
/// 1 / v_F). Dirty: adaptive quadrature in log-time over the window where
/// the integrand envelope exceeds envelope_cut times its peak.
double laplace_term_clean(double R, int n, const CleanParams& p);
QuadratureResult laplace_term_dirty(double R, int n, const DirtyParams& p,
                                    const QuadratureConfig& quad);

/// Radial Fourier transform of the coordinate-space term, truncated where
/// its exponential envelope drops below envelope_cut.
QuadratureResult radial_fourier_term_clean(int n, double p_mom, const CleanParams& p,
                                           const QuadratureConfig& quad);
QuadratureResult radial_fourier_term_dirty(int n, double p_mom, const DirtyParams& p,
                                           const QuadratureConfig& quad);

}  // namespace singlet
