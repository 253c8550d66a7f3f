#pragma once

#include "singlet/spinor.hpp"

#include <cmath>
#include <numbers>

namespace testing {

inline const double kRt2 = std::numbers::sqrt2;
inline const double kPi = std::numbers::pi;
inline const singlet::Complex kI{0.0, 1.0};

inline singlet::TwoSpinState state(singlet::Complex a, singlet::Complex b, singlet::Complex c,
                                   singlet::Complex d) {
    return singlet::TwoSpinState{{a, b, c, d}};
}

inline singlet::Matrix2 mat(singlet::Complex a, singlet::Complex b, singlet::Complex c,
                            singlet::Complex d) {
    return singlet::Matrix2{{a, b, c, d}};
}

inline double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

}  // namespace testing
