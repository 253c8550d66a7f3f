#pragma once

// Random rotations, unitaries and bases for invariance checks.

#include "singlet/spinor.hpp"
#include "singlet/states.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace singlet {

/// Uniform point on the unit sphere.
template <typename Rng>
Vec3 random_unit_vector(Rng& rng) {
    std::normal_distribution<double> gauss;
    for (;;) {
        const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = v.norm();
        if (n > 1e-8) return {v.x / n, v.y / n, v.z / n};
    }
}

/// Haar-distributed SU(2) element written as a rotation: a uniform unit
/// quaternion (cos(phi/2), sin(phi/2) m).
template <typename Rng>
RotationSpec random_rotation(Rng& rng) {
    std::normal_distribution<double> gauss;
    double q[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& x : q) {
            x = gauss(rng);
            n2 += x * x;
        }
    } while (n2 < 1e-16);
    const double vec = std::sqrt(q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    const double angle = 2.0 * std::atan2(vec, q[0]);
    if (vec < 1e-300) return {{0.0, 0.0, 1.0}, 0.0};
    return {{q[1] / vec, q[2] / vec, q[3] / vec}, angle};
}

/// Haar-distributed U(2): a Haar SU(2) element times a uniform global phase.
template <typename Rng>
Matrix2 random_unitary(Rng& rng) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, phase(rng)) * rotation_matrix(random_rotation(rng));
}

/// Image of the z pair under a Haar unitary, with independent random phases
/// on the two vectors.
template <typename Rng>
OrthonormalBasis random_basis(Rng& rng) {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    const Matrix2 u = random_unitary(rng);
    return {std::polar(1.0, phase(rng)) * (u * eigenspinor(Axis::Z, Sign::Plus)),
            std::polar(1.0, phase(rng)) * (u * eigenspinor(Axis::Z, Sign::Minus))};
}

}  // namespace singlet
