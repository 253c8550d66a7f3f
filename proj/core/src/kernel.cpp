#include "singlet/kernel.hpp"

#include "singlet/spinor.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace singlet {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(name) + " must be > 0");
    }
}

void require_term_index(int n) {
    if (n < 0) throw ValidationError("Matsubara index must be >= 0");
}

void require_cutoff(MatsubaraCutoff cutoff) {
    if (cutoff.n_max < 0) throw ValidationError("n_max must be >= 0");
}

/// sqrt(sqrt(w^2 + J^2) -+ w) / sqrt(hbar D): oscillation and decay rates of
/// the dirty coordinate kernel.
struct DirtyRates {
    double oscillation;
    double decay;
};

DirtyRates dirty_rates(int n, const DirtyParams& p) {
    const double w = matsubara_freq(n, p.t_c);
    const double modulus = std::hypot(w, p.j);
    const double scale = std::sqrt(p.hbar * p.d);
    // modulus - w loses precision for J << w; J^2 / (modulus + w) does not.
    const double lower = p.j * p.j / (modulus + w);
    return {std::sqrt(lower) / scale, std::sqrt(modulus + w) / scale};
}

template <typename Term>
double matsubara_sum(MatsubaraCutoff cutoff, Term term) {
    require_cutoff(cutoff);
    double sum = 0.0;
    for (int n = 0; n <= cutoff.n_max; ++n) sum += term(n);
    return sum;
}

int pieces_for(double frequency, double length) {
    const double periods = frequency * length / (2.0 * kPi);
    return 8 + static_cast<int>(std::ceil(2.0 * periods));
}

}  // namespace

void CleanParams::validate() const {
    require_positive(n0, "N(0)");
    require_positive(g_abs, "|g|");
    require_positive(t_c, "T_c");
    require_positive(v_f, "v_F");
    require_positive(hbar, "hbar");
    if (!(j >= 0.0) || !std::isfinite(j)) throw ValidationError("J must be >= 0");
}

void DirtyParams::validate() const {
    require_positive(n0, "N(0)");
    require_positive(g_abs, "|g|");
    require_positive(t_c, "T_c");
    require_positive(d, "D");
    require_positive(hbar, "hbar");
    if (!(j >= 0.0) || !std::isfinite(j)) throw ValidationError("J must be >= 0");
}

double matsubara_freq(int n, double t_c) {
    require_positive(t_c, "T_c");
    return (2.0 * n + 1.0) * kPi * t_c;
}

// ---- clean ----------------------------------------------------------------

double clean_spin_factor(double R, const CleanParams& p) {
    return std::cos(2.0 * R * p.j / (p.hbar * p.v_f));
}

double clean_kernel_term_r(double R, int n, const CleanParams& p) {
    p.validate();
    require_positive(R, "R");
    require_term_index(n);
    const double w = matsubara_freq(n, p.t_c);
    const double hv = p.hbar * p.v_f;
    return p.n0 * p.g_abs * p.t_c / (hv * R * R) * clean_spin_factor(R, p) *
           std::exp(-2.0 * w * R / hv);
}

double clean_kernel_r(double R, const CleanParams& p, MatsubaraCutoff cutoff) {
    return matsubara_sum(cutoff, [&](int n) { return clean_kernel_term_r(R, n, p); });
}

double clean_kernel_term_p(double p_mom, int n, const CleanParams& p) {
    p.validate();
    require_positive(p_mom, "p");
    require_term_index(n);
    const double w = matsubara_freq(n, p.t_c);
    const double pv = p_mom * p.v_f;
    return 2.0 * kPi * p.n0 * p.g_abs * p.t_c / pv *
           (std::atan((pv - 2.0 * p.j) / (2.0 * w)) + std::atan((pv + 2.0 * p.j) / (2.0 * w)));
}

double clean_kernel_p(double p_mom, const CleanParams& p, MatsubaraCutoff cutoff) {
    return matsubara_sum(cutoff, [&](int n) { return clean_kernel_term_p(p_mom, n, p); });
}

// ---- dirty ----------------------------------------------------------------

double dirty_spin_factor(double R, int n, const DirtyParams& p) {
    return std::cos(R * dirty_rates(n, p).oscillation);
}

double dirty_kernel_term_r(double R, int n, const DirtyParams& p) {
    p.validate();
    require_positive(R, "R");
    require_term_index(n);
    const DirtyRates rates = dirty_rates(n, p);
    return p.n0 * p.g_abs * p.t_c / (p.hbar * R * p.d) * std::cos(R * rates.oscillation) *
           std::exp(-R * rates.decay);
}

double dirty_kernel_r(double R, const DirtyParams& p, MatsubaraCutoff cutoff) {
    return matsubara_sum(cutoff, [&](int n) { return dirty_kernel_term_r(R, n, p); });
}

namespace {
double dirty_momentum_shape(double p_mom, int n, const DirtyParams& p) {
    p.validate();
    if (!(p_mom >= 0.0) || !std::isfinite(p_mom)) throw ValidationError("p must be >= 0");
    require_term_index(n);
    const double x = 2.0 * matsubara_freq(n, p.t_c) + p.d * p_mom * p_mom / p.hbar;
    return p.n0 * p.g_abs * p.t_c * x / (x * x + 4.0 * p.j * p.j);
}
}  // namespace

double dirty_kernel_term_p(double p_mom, int n, const DirtyParams& p) {
    return 4.0 * kPi * dirty_momentum_shape(p_mom, n, p);
}

double dirty_kernel_term_p_literature(double p_mom, int n, const DirtyParams& p) {
    return 2.0 * dirty_momentum_shape(p_mom, n, p);
}

double dirty_kernel_p(double p_mom, const DirtyParams& p, MatsubaraCutoff cutoff) {
    return matsubara_sum(cutoff, [&](int n) { return dirty_kernel_term_p(p_mom, n, p); });
}

// ---- reconstruction from correlators -------------------------------------

double laplace_term_clean(double R, int n, const CleanParams& p) {
    p.validate();
    require_positive(R, "R");
    require_term_index(n);
    const double w = matsubara_freq(n, p.t_c);
    const double t = R / p.v_f;
    const DeltaShell f = pair_correlation_clean(t, p.v_f, p.j, p.hbar);
    // delta(R - v_F t) = delta(t - R / v_F) / v_F
    return 2.0 * kPi * p.n0 * p.g_abs * p.t_c / p.hbar * std::exp(-2.0 * w * t / p.hbar) *
           f.surface_weight / p.v_f;
}

QuadratureResult laplace_term_dirty(double R, int n, const DirtyParams& p,
                                    const QuadratureConfig& quad) {
    p.validate();
    require_positive(R, "R");
    require_term_index(n);
    quad.validate();

    const double w = matsubara_freq(n, p.t_c);
    const double b = R * R / (4.0 * p.d);
    const double s = 2.0 * w / p.hbar;

    // In log-time the integrand is t * f(t); its envelope is ~ t^{-1/2} e^{-b/t - s t}.
    auto log_envelope = [&](double t) { return -0.5 * std::log(t) - b / t - s * t; };
    const double t_peak = (-0.5 + std::sqrt(0.25 + 4.0 * s * b)) / (2.0 * s);
    const double floor = log_envelope(t_peak) + std::log(quad.envelope_cut);
    double t_lo = t_peak;
    while (log_envelope(t_lo) > floor) t_lo *= 0.5;
    double t_hi = t_peak;
    while (log_envelope(t_hi) > floor) t_hi *= 2.0;

    const double prefactor = 2.0 * kPi * p.n0 * p.g_abs * p.t_c / p.hbar;
    auto integrand = [&](double u) {
        const double t = std::exp(u);
        return std::exp(-s * t) * pair_correlation_dirty(R, t, p.d, p.j, p.hbar) * t;
    };

    const double u_lo = std::log(t_lo);
    const double u_hi = std::log(t_hi);
    const int pieces = pieces_for(2.0 * p.j / p.hbar, t_hi) + static_cast<int>(u_hi - u_lo);
    QuadratureResult r = integrate(integrand, u_lo, u_hi, quad, pieces);
    r.value *= prefactor;
    r.error_estimate *= prefactor;
    return r;
}

QuadratureResult radial_fourier_term_clean(int n, double p_mom, const CleanParams& p,
                                           const QuadratureConfig& quad) {
    p.validate();
    require_positive(p_mom, "p");
    require_term_index(n);
    quad.validate();

    const double decay = 2.0 * matsubara_freq(n, p.t_c) / (p.hbar * p.v_f);
    const double r_cut = -std::log(quad.envelope_cut) / decay;
    const double k = p_mom / p.hbar;
    auto integrand = [&](double R) { return R * std::sin(k * R) * clean_kernel_term_r(R, n, p); };

    const int pieces = pieces_for(k + 2.0 * p.j / (p.hbar * p.v_f), r_cut);
    QuadratureResult r = integrate(integrand, 0.0, r_cut, quad, pieces);
    const double scale = 4.0 * kPi / k;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

QuadratureResult radial_fourier_term_dirty(int n, double p_mom, const DirtyParams& p,
                                           const QuadratureConfig& quad) {
    p.validate();
    require_positive(p_mom, "p");
    require_term_index(n);
    quad.validate();

    const DirtyRates rates = dirty_rates(n, p);
    const double r_cut = -std::log(quad.envelope_cut) / rates.decay;
    const double k = p_mom / p.hbar;
    auto integrand = [&](double R) { return R * std::sin(k * R) * dirty_kernel_term_r(R, n, p); };

    const int pieces = pieces_for(k + rates.oscillation, r_cut);
    QuadratureResult r = integrate(integrand, 0.0, r_cut, quad, pieces);
    const double scale = 4.0 * kPi / k;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

}  // namespace singlet
