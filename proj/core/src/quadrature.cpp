#include "singlet/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace singlet {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct LargerError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate(const std::function<double(double)>& f, double a, double b) {
    double error = 0.0;
    double l1 = 0.0;
    const double value = Rule::integrate(f, a, b, 0, 0.0, &error, &l1);
    // The rule reports its error on the reference interval [-1, 1].
    error *= 0.5 * (b - a);
    const double floor = 50.0 * std::numeric_limits<double>::epsilon() * l1;
    return {a, b, value, std::max(error, floor)};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(envelope_cut > 0.0) || envelope_cut >= 1.0) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_intervals < 1) throw std::invalid_argument("max_intervals must be >= 1");
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg, int initial_pieces) {
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("integrate: bounds must be finite");
    }
    if (a == b) return {};

    initial_pieces = std::clamp(initial_pieces, 1, cfg.max_intervals);
    std::priority_queue<Panel, std::vector<Panel>, LargerError> panels;
    const double width = (b - a) / initial_pieces;
    for (int i = 0; i < initial_pieces; ++i) {
        const double lo = a + i * width;
        const double hi = i + 1 == initial_pieces ? b : a + (i + 1) * width;
        panels.push(evaluate(f, lo, hi));
    }

    auto totals = [&panels] {
        // Summed in a fixed order so results do not depend on heap layout.
        std::vector<Panel> all;
        auto copy = panels;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
        double value = 0.0;
        double error = 0.0;
        for (const Panel& p : all) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };

    double value = 0.0;
    double error = 0.0;
    double running_error = 0.0;
    double running_value = 0.0;
    {
        auto copy = panels;
        while (!copy.empty()) {
            running_value += copy.top().value;
            running_error += copy.top().error;
            copy.pop();
        }
    }

    auto converged = [&cfg](double v, double e) {
        return e <= cfg.rel_tol * std::abs(v) || std::abs(v) + e <= cfg.abs_tol;
    };

    while (!converged(running_value, running_error) &&
           static_cast<int>(panels.size()) < cfg.max_intervals) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {  // interval at machine resolution
            panels.push(worst);
            break;
        }
        const Panel left = evaluate(f, worst.a, mid);
        const Panel right = evaluate(f, mid, worst.b);
        running_value += left.value + right.value - worst.value;
        running_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    std::tie(value, error) = totals();
    if (!std::isfinite(value) || !std::isfinite(error) || !converged(value, error)) {
        std::ostringstream msg;
        msg.imbue(std::locale::classic());
        msg << std::setprecision(6) << "integrate: no convergence after " << cfg.max_intervals
            << " intervals (error estimate " << error << ", value " << value << ")";
        throw QuadratureError(msg.str(), value, error);
    }
    return {value, error, static_cast<int>(panels.size())};
}

}  // namespace singlet
