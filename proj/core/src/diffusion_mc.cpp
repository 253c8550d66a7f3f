#include "singlet/diffusion_mc.hpp"

#include "singlet/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

namespace singlet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double sample_squared_radius(std::uint64_t seed, std::int64_t path, int n_steps, double sigma) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(path))));
    std::normal_distribution<double> step(0.0, sigma);
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    for (int s = 0; s < n_steps; ++s) {
        x += step(rng);
        y += step(rng);
        z += step(rng);
    }
    return x * x + y * y + z * z;
}

}  // namespace

void MCConfig::validate() const {
    if (n_paths < 1) throw ValidationError("n_paths must be >= 1");
    if (n_steps < 1) throw ValidationError("n_steps must be >= 1");
    if (bin_edges.size() < 2) throw ValidationError("need at least two bin edges");
    for (std::size_t i = 1; i < bin_edges.size(); ++i) {
        if (!(bin_edges[i] > bin_edges[i - 1])) {
            throw ValidationError("bin edges must be strictly increasing");
        }
    }
}

DiffusionHistogram mc_diffusion_correlator(double t, const DirtyParams& params,
                                           const MCConfig& mc, unsigned threads) {
    if (!(t > 0.0)) throw ValidationError("mc_diffusion_correlator: t must be > 0");
    params.validate();
    mc.validate();

    const double sigma = std::sqrt(2.0 * params.d * t / mc.n_steps);
    std::vector<double> r2(static_cast<std::size_t>(mc.n_paths));

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(mc.n_paths)));
    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t i = begin; i < end; ++i) {
            r2[static_cast<std::size_t>(i)] = sample_squared_radius(mc.seed, i, mc.n_steps, sigma);
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::int64_t chunk = (mc.n_paths + threads - 1) / threads;
        for (unsigned k = 0; k < threads; ++k) {
            const std::int64_t begin = k * chunk;
            const std::int64_t end = std::min(mc.n_paths, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
    }

    DiffusionHistogram h;
    h.n_paths = mc.n_paths;
    const auto& edges = mc.bin_edges;
    h.bins.resize(edges.size() - 1);
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        h.bins[b].lo = edges[b];
        h.bins[b].hi = edges[b + 1];
    }

    double sum = 0.0;
    for (double v : r2) {
        sum += v;
        const double r = std::sqrt(v);
        const auto it = std::upper_bound(edges.begin(), edges.end(), r);
        if (it == edges.begin() || it == edges.end()) continue;
        ++h.bins[static_cast<std::size_t>(it - edges.begin() - 1)].count;
    }
    const double n = static_cast<double>(mc.n_paths);
    const double mean = sum / n;
    double var = 0.0;
    for (double v : r2) var += (v - mean) * (v - mean);
    var /= std::max(1.0, n - 1.0);
    h.mean_squared_displacement = mean;
    h.msd_std_error = std::sqrt(var / n);

    for (RadialBin& bin : h.bins) {
        const double frac = static_cast<double>(bin.count) / n;
        const double width = bin.hi - bin.lo;
        bin.density = frac / width;
        bin.std_error = std::sqrt(frac * (1.0 - frac) / n) / width;
    }
    return h;
}

double diffusion_radial_cdf(double R, double t, double d) {
    if (!(t > 0.0) || !(d > 0.0)) throw ValidationError("diffusion_radial_cdf: t, D must be > 0");
    if (R <= 0.0) return 0.0;
    const double sigma = std::sqrt(2.0 * d * t);
    const double x = R / sigma;
    return std::erf(x / std::numbers::sqrt2) -
           std::sqrt(2.0 / std::numbers::pi) * x * std::exp(-0.5 * x * x);
}

}  // namespace singlet
