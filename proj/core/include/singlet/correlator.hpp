#pragma once

// Classical position correlators <delta(r(t) - r') delta(r(0) - r)> at the
// Fermi surface, and the pair correlation f(R, t) built from them.

#include <array>

namespace singlet {

enum class Limit { Clean, Dirty };

/// (1/4pi) R^-2 delta(R - radius), kept symbolic. `surface_weight` is the
/// coefficient of the delta function at R = radius.
struct DeltaShell {
    double radius = 0.0;
    double surface_weight = 0.0;
};

/// Ballistic correlator: shell of radius v_F t.
DeltaShell clean_correlator(double t, double v_f);

/// Diffusive correlator (4 pi D t)^{-3/2} exp(-R^2 / 4Dt). Requires t > 0, R >= 0.
double dirty_correlator(double R, double t, double d);

/// The four trajectory terms of the pair correlation, each the correlator times
/// (|a|/2) sign(a): two forward in time with a(t), two backward with a(-t).
struct FourTermDecomposition {
    std::array<double, 4> terms{};

    /// (t0 + t1) + (t2 + t3); exact for four equal terms.
    double sum() const { return (terms[0] + terms[1]) + (terms[2] + terms[3]); }
};

FourTermDecomposition four_term_decomposition(double correlator, double a_forward,
                                              double a_backward);

/// f = 2 <delta delta> a(t), with a(t) from the time-reversal trace. Also
/// evaluates the four-term form and throws ConsistencyError if the two differ.
double pair_correlation_dirty(double R, double t, double d, double J, double hbar);

/// Clean f: the shell of clean_correlator with weight scaled by 2 a(t).
DeltaShell pair_correlation_clean(double t, double v_f, double J, double hbar);

}  // namespace singlet
