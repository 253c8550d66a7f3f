#include "singlet/evolution.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace singlet {

namespace {

constexpr double kRouteTolerance = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_oscillation(const FieldParams& p, const char* what) {
    p.validate();
    if (p.J == 0.0) {
        throw ValidationError(std::string(what) + ": J = 0 has no oscillation");
    }
}

// Phases J t/hbar carry a rounding error proportional to their size.
double route_tolerance(const FieldParams& p, double t) {
    const double phase = std::abs(2.0 * p.J * t / p.hbar);
    return std::max(kRouteTolerance, 8.0 * std::numeric_limits<double>::epsilon() * phase);
}

double half_trace_real(const Matrix2& m) { return 0.5 * m.trace().real(); }

}  // namespace

void FieldParams::validate() const {
    if (!std::isfinite(J)) throw ValidationError("J must be finite");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ValidationError("hbar must be positive");
}

Matrix2 hamiltonian(const FieldParams& p) {
    p.validate();
    return Complex(-p.J) * pauli(Axis::Z);
}

Matrix2 single_evolution(const FieldParams& p, double t) {
    p.validate();
    const double phase = p.J * t / p.hbar;
    return Matrix2::diagonal({std::polar(1.0, phase), std::polar(1.0, -phase)});
}

Matrix2 reversed_evolution(const FieldParams& p, double t) {
    const AntiunitaryOp k = time_reversal();
    const Matrix2& m = k.unitary_part();

    // K o U(-t) o K^+ acts linearly with matrix M conj(U(-t)) M^dagger.
    const Matrix2 conjugated = m * single_evolution(p, -t).conj() * m.adjoint();
    const Matrix2 generated = unitary_exp(sandwich(k, hamiltonian(p)), t / p.hbar);

    const double dev = max_abs_diff(conjugated, generated);
    if (!(dev <= route_tolerance(p, t))) {
        throw ConsistencyError("reversed_evolution: K U(-t) K^+ and exp(-iKHK^+t) differ by " +
                               std::to_string(dev));
    }
    return conjugated;
}

Matrix4 pair_evolution(const FieldParams& p, double t) {
    return kron(single_evolution(p, t), reversed_evolution(p, t));
}

PairGenerators pair_generators(const Matrix2& h, double tol) {
    const Matrix2 id = Matrix2::identity();
    const Matrix2 reversed = sandwich(time_reversal(), h, tol);
    return {kron(h, id) + kron(id, h), kron(h, id) + kron(id, reversed),
            kron(reversed, id) + kron(id, h)};
}

TwoSpinState evolve_singlet(const FieldParams& p, double t) {
    return pair_evolution(p, t) * canonical_singlet();
}

TwoSpinState evolve_singlet_in_basis(const FieldParams& p, double t,
                                     const OrthonormalBasis& basis) {
    if (!(basis.orthonormality_defect() <= kDefaultTolerance)) {
        throw ValidationError("evolve_singlet_in_basis: basis is not orthonormal");
    }
    const AntiunitaryOp k = time_reversal();
    const Matrix2 u = single_evolution(p, t);
    const Matrix2 u_rev = reversed_evolution(p, t);
    return Complex(kInvSqrt2) * (kron(u * basis.plus, u_rev * k(basis.plus)) +
                                 kron(u * basis.minus, u_rev * k(basis.minus)));
}

TwoSpinState conjugate_evolution(const FieldParams& p, double t) {
    return evolve_singlet(p, t).conj();
}

AmplitudePair amplitudes(const TwoSpinState& state, double tol) {
    if (!(std::abs(state.norm2() - 1.0) <= tol)) {
        throw ValidationError("amplitudes: state is not normalized");
    }
    return {inner(canonical_singlet(), state), inner(triplet_z0(), state)};
}

AmplitudePair amplitudes_closed_form(const FieldParams& p, double t) {
    p.validate();
    const double x = 2.0 * p.J * t / p.hbar;
    return {Complex(std::cos(x)), Complex(0.0, std::sin(x))};
}

Branch branch(const FieldParams& p, double t, double node_tol) {
    const double a = amplitudes(evolve_singlet(p, t)).a.real();
    if (a > node_tol) return Branch::Singlet12;
    if (a < -node_tol) return Branch::Singlet21;
    return Branch::Node;
}

double node_time(const FieldParams& p, int k) {
    require_oscillation(p, "node_time");
    return (2.0 * k + 1.0) * std::numbers::pi * p.hbar / (4.0 * std::abs(p.J));
}

double period(const FieldParams& p) {
    require_oscillation(p, "period");
    return std::numbers::pi * p.hbar / std::abs(p.J);
}

AntiunitaryOp heisenberg_time_reversal(const FieldParams& p, double t) {
    const Matrix2 v = single_evolution(p, -t);  // exp(+iHt/hbar)
    return AntiunitaryOp(v * time_reversal().unitary_part() * v.conj());
}

TraceAmplitudes trace_amplitudes(const FieldParams& p, double t) {
    const AntiunitaryOp k0_adj = time_reversal().adjoint();
    const Matrix2 g = metric_spinor();
    const Matrix2 u = single_evolution(p, t);
    const Matrix2 u_rev = reversed_evolution(p, t);
    return {
        half_trace_real(compose(heisenberg_time_reversal(p, t), k0_adj)),
        -half_trace_real(g * u * g * u_rev.transpose()),
        half_trace_real(compose(heisenberg_time_reversal(p, -t), k0_adj)),
        -half_trace_real(g * u_rev * g * u.transpose()),
    };
}

double amplitude_via_trace(const FieldParams& p, double t) {
    const AntiunitaryOp k0_adj = time_reversal().adjoint();
    const Complex forward = 0.5 * compose(heisenberg_time_reversal(p, t), k0_adj).trace();
    const double tol = route_tolerance(p, t);
    if (!(std::abs(forward.imag()) <= tol)) {
        throw ConsistencyError("amplitude_via_trace: trace is not real");
    }
    const TraceAmplitudes r = trace_amplitudes(p, t);
    const double spread =
        std::max({std::abs(r.forward_via_operators - r.forward_via_metric),
                  std::abs(r.forward_via_operators - r.backward_via_operators),
                  std::abs(r.forward_via_operators - r.backward_via_metric)});
    if (!(spread <= tol)) {
        throw ConsistencyError("amplitude_via_trace: trace routes disagree by " +
                               std::to_string(spread));
    }
    return forward.real();
}

Matrix2 matrix_form_evolution(const FieldParams& p, double t) {
    return Complex(kInvSqrt2) *
           (single_evolution(p, t) * metric_spinor() * reversed_evolution(p, t).transpose());
}

Matrix2 matrix_form_conjugate_evolution(const FieldParams& p, double t) {
    return Complex(kInvSqrt2) *
           (reversed_evolution(p, t) * metric_spinor() * single_evolution(p, t).transpose());
}

double flip_probability(const FieldParams& p, double t) {
    const Spinor up = eigenspinor(Axis::X, Sign::Plus);
    const Spinor down = eigenspinor(Axis::X, Sign::Minus);
    return std::norm(inner(down, single_evolution(p, t) * up));
}

double orientation_probability(const FieldParams& p, double t) {
    return std::abs(0.5 - flip_probability(p, t));
}

const char* to_string(Branch b) {
    switch (b) {
        case Branch::Singlet12: return "Singlet12";
        case Branch::Singlet21: return "Singlet21";
        case Branch::Node: return "Node";
    }
    return "?";
}

}  // namespace singlet
