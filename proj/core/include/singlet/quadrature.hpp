#pragma once

// Globally adaptive Gauss-Kronrod integration on finite intervals.

#include <functional>
#include <stdexcept>
#include <string>

namespace singlet {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Envelope ratio below which infinite tails are dropped.
    double envelope_cut = 1e-16;
    int max_intervals = 4000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;
};

/// Carries the error estimate reached when the budget ran out.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

    double value() const { return value_; }
    double error_estimate() const { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

/// Integrates f over [a, b], starting from `initial_pieces` equal panels and
/// bisecting the panel with the largest error estimate. Converged when
///   error <= rel_tol * |I|   or   |I| + error <= abs_tol
/// (the second form only accepts integrals that are zero to within abs_tol).
/// Each panel error is floored at 50 eps * integral of |f| over the panel.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, int initial_pieces = 1);

}  // namespace singlet
