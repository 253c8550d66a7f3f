#pragma once

// Exact time evolution of a two-spin singlet in a static field along z.
//
// Spin 1 evolves with U(t) = exp(-iHt/hbar), spin 2 with the time-reversed
// propagator U_rev(t) = K U(-t) K^+ = exp(-i K H K^+ t/hbar). Starting from
// the canonical singlet the state stays in span{Psi_S, Psi_T0}:
//
//   Psi(t) = a(t) Psi_S + b(t) Psi_T0,  a = cos(2Jt/hbar),  b = i sin(2Jt/hbar).

#include "singlet/spinor.hpp"
#include "singlet/states.hpp"

namespace singlet {

/// Homogeneous field along z: H = -J sigma_z. For a magnetic field,
/// J = -g mu_B H_z.
struct FieldParams {
    double J = 1.0;
    double hbar = 1.0;

    void validate() const;
};

struct AmplitudePair {
    Complex a;  ///< <Psi_S|psi>
    Complex b;  ///< <Psi_T0|psi>
};

enum class Branch { Singlet12, Singlet21, Node };

inline constexpr double kDefaultNodeTolerance = 1e-9;

Matrix2 hamiltonian(const FieldParams& p);

/// exp(-iHt/hbar) = diag(e^{iJt/hbar}, e^{-iJt/hbar})
Matrix2 single_evolution(const FieldParams& p, double t);

/// K U(-t) K^+, cross-checked against exp(-i K H K^+ t/hbar). Throws
/// ConsistencyError if the two routes disagree by more than 1e-12.
Matrix2 reversed_evolution(const FieldParams& p, double t);

/// U(t) (x) U_rev(t)
Matrix4 pair_evolution(const FieldParams& p, double t);

struct PairGenerators {
    /// H (x) I + I (x) H, the generator for two independent spins.
    Matrix4 independent;
    /// H (x) I + I (x) K H K^+, the generator of pair_evolution.
    Matrix4 correlated;
    /// K H K^+ (x) I + I (x) H, the same correlation with the spins exchanged.
    Matrix4 correlated_mirrored;
};

PairGenerators pair_generators(const Matrix2& h, double tol = kDefaultTolerance);

/// pair_evolution(p, t) applied to canonical_singlet(). No re-phasing.
TwoSpinState evolve_singlet(const FieldParams& p, double t);

/// Builds the evolved state from a transverse basis n:
/// (1/sqrt2) sum_s U psi_s (x) U_rev K psi_s. Equals -evolve_singlet for any
/// orthonormal basis.
TwoSpinState evolve_singlet_in_basis(const FieldParams& p, double t,
                                     const OrthonormalBasis& basis);

/// Elementwise complex conjugate of evolve_singlet.
TwoSpinState conjugate_evolution(const FieldParams& p, double t);

/// Projections on the canonical pair. Throws ValidationError unless
/// | |state|^2 - 1 | <= tol.
AmplitudePair amplitudes(const TwoSpinState& state, double tol = kDefaultTolerance);

/// (cos(2Jt/hbar), i sin(2Jt/hbar))
AmplitudePair amplitudes_closed_form(const FieldParams& p, double t);

Branch branch(const FieldParams& p, double t, double node_tol = kDefaultNodeTolerance);

/// (2k+1) pi hbar / (4|J|). Rejects J = 0.
double node_time(const FieldParams& p, int k);

/// pi hbar / |J|. Rejects J = 0.
double period(const FieldParams& p);

/// K(t) = exp(iHt/hbar) o K(0) o exp(iHt/hbar); unitary part
/// V M0 conj(V) with V = exp(iHt/hbar).
AntiunitaryOp heisenberg_time_reversal(const FieldParams& p, double t);

/// a(t) along the trace routes. `via_operators` are the (1/2)Sp[K(+-t)K^+(0)]
/// forms, `via_metric` the -(1/2)Sp[g U g U_rev^T] style forms.
struct TraceAmplitudes {
    double forward_via_operators;   // (1/2) Sp[K(t) K^+(0)]
    double forward_via_metric;      // -(1/2) Sp[g U(t) g U_rev(t)^T]
    double backward_via_operators;  // (1/2) Sp[K(-t) K^+(0)]
    double backward_via_metric;     // -(1/2) Sp[g U_rev(t) g U(t)^T]
};

TraceAmplitudes trace_amplitudes(const FieldParams& p, double t);

/// (1/2) Sp[K(t) K^+(0)]. Throws ConsistencyError when the four trace routes
/// disagree by more than 1e-12 or carry an imaginary part above 1e-12.
double amplitude_via_trace(const FieldParams& p, double t);

/// (1/sqrt2) U(t) g U_rev(t)^T
Matrix2 matrix_form_evolution(const FieldParams& p, double t);
/// (1/sqrt2) U_rev(t) g U(t)^T
Matrix2 matrix_form_conjugate_evolution(const FieldParams& p, double t);

/// |<x-|U(t)|x+>|^2 = sin^2(Jt/hbar)
double flip_probability(const FieldParams& p, double t);

/// |1/2 - sin^2(Jt/hbar)| = |a(t)|/2
double orientation_probability(const FieldParams& p, double t);

const char* to_string(Branch b);

}  // namespace singlet
