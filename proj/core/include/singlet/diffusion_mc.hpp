#pragma once

// Monte Carlo sampling of isotropic diffusion, used as an independent check of
// the diffusive correlator (4 pi D t)^{-3/2} exp(-R^2 / 4Dt).

#include "singlet/kernel.hpp"

#include <cstdint>
#include <vector>

namespace singlet {

struct MCConfig {
    std::int64_t n_paths = 100000;
    int n_steps = 16;
    std::uint64_t seed = 1;
    /// Radial bin edges, strictly increasing, at least two.
    std::vector<double> bin_edges;

    void validate() const;
};

struct RadialBin {
    double lo = 0.0;
    double hi = 0.0;
    std::int64_t count = 0;
    /// Estimated radial density (1 / length): fraction of paths per unit R.
    double density = 0.0;
    double std_error = 0.0;
};

struct DiffusionHistogram {
    std::vector<RadialBin> bins;
    double mean_squared_displacement = 0.0;
    double msd_std_error = 0.0;
    std::int64_t n_paths = 0;
};

/// Samples n_paths Gaussian random walks of n_steps increments with per-step
/// variance 2 D t / n_steps per coordinate and bins the final |r|.
///
/// Path i draws from its own generator seeded from (seed, i), and results are
/// merged in path order, so the output is bit-identical for any `threads`.
DiffusionHistogram mc_diffusion_correlator(double t, const DirtyParams& params,
                                           const MCConfig& mc, unsigned threads = 1);

/// Probability that the diffusing particle is found at |r| < R after time t,
/// the integral of 4 pi r^2 (4 pi D t)^{-3/2} exp(-r^2 / 4Dt) over [0, R].
double diffusion_radial_cdf(double R, double t, double d);

}  // namespace singlet
