#include "singlet/correlator.hpp"

#include "singlet/evolution.hpp"

#include <cmath>
#include <numbers>

namespace singlet {

namespace {

void require_positive_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw ValidationError("correlator: t must be > 0");
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// The backward trajectories enter with a(-t); time-reversal symmetry a(-t) = a(t)
// is checked and then used to identify the two pairs of terms.
double checked_pair_factor(double correlator, double a_forward, double a_backward) {
    if (!(std::abs(a_forward - a_backward) <= 1e-12)) {
        throw ConsistencyError("pair correlation: a(-t) != a(t)");
    }
    const double economical = 2.0 * correlator * a_forward;
    const double four_term = four_term_decomposition(correlator, a_forward, a_forward).sum();
    if (economical != four_term) {
        throw ConsistencyError("pair correlation: four-term sum differs from 2<dd>a(t)");
    }
    return economical;
}

}  // namespace

DeltaShell clean_correlator(double t, double v_f) {
    require_positive_time(t);
    if (!(v_f > 0.0)) throw ValidationError("clean_correlator: v_F must be > 0");
    const double radius = v_f * t;
    return {radius, 1.0 / (4.0 * std::numbers::pi * radius * radius)};
}

double dirty_correlator(double R, double t, double d) {
    require_positive_time(t);
    if (!(d > 0.0)) throw ValidationError("dirty_correlator: D must be > 0");
    if (!(R >= 0.0)) throw ValidationError("dirty_correlator: R must be >= 0");
    const double spread = 4.0 * std::numbers::pi * d * t;
    return std::exp(-R * R / (4.0 * d * t)) / (spread * std::sqrt(spread));
}

FourTermDecomposition four_term_decomposition(double correlator, double a_forward,
                                              double a_backward) {
    const double fwd = correlator * (std::abs(a_forward) / 2.0) * sign_of(a_forward);
    const double bwd = correlator * (std::abs(a_backward) / 2.0) * sign_of(a_backward);
    return {{fwd, bwd, fwd, bwd}};
}

double pair_correlation_dirty(double R, double t, double d, double J, double hbar) {
    const FieldParams field{J, hbar};
    const double c = dirty_correlator(R, t, d);
    return checked_pair_factor(c, amplitude_via_trace(field, t), amplitude_via_trace(field, -t));
}

DeltaShell pair_correlation_clean(double t, double v_f, double J, double hbar) {
    const FieldParams field{J, hbar};
    DeltaShell shell = clean_correlator(t, v_f);
    shell.surface_weight = checked_pair_factor(shell.surface_weight, amplitude_via_trace(field, t),
                                               amplitude_via_trace(field, -t));
    return shell;
}

}  // namespace singlet
