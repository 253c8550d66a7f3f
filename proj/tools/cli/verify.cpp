// The `verify` command: runs every invariant suite and prints a report.

#include "cli.hpp"
#include "table.hpp"

#include "singlet/diffusion_mc.hpp"
#include "singlet/evolution.hpp"
#include "singlet/kernel.hpp"
#include "singlet/sampling.hpp"
#include "singlet/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <utility>

namespace singlet::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20211001;

struct SuiteResult {
    SuiteResult(std::string suite, double limit) : name(std::move(suite)), threshold(limit) {}

    std::string name;
    double threshold = 0.0;
    double max_deviation = 0.0;
    long checks = 0;
    bool failed = false;
    std::string detail;

    void record(double deviation) {
        ++checks;
        // NaN counts as failure.
        if (!(deviation <= threshold)) failed = true;
        if (!(deviation <= max_deviation)) max_deviation = deviation;
    }
    bool passed() const { return !failed; }
};

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        g[static_cast<std::size_t>(i)] =
            lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    }
    return g;
}

double rel_err(double value, double reference) {
    return std::abs(value - reference) / std::abs(reference);
}

// Deviation of b from a up to a global phase.
double phase_free_deviation(const TwoSpinState& a, const TwoSpinState& b) {
    const Complex overlap = inner(a, b);
    const double mag = std::abs(overlap);
    if (mag == 0.0) return std::sqrt(std::max(a.norm2(), b.norm2()));
    return max_abs_diff(Complex(overlap / mag) * a, b);
}

SuiteResult singlet_invariance(std::uint64_t seed) {
    SuiteResult r{"singlet_invariance", 1e-13};
    std::mt19937_64 rng(seed);
    const TwoSpinState singlet = canonical_singlet();
    for (int i = 0; i < 1000; ++i) {
        const RotationSpec rot = random_rotation(rng);
        r.record(max_abs_diff(rotate_two_spin(singlet, rot), singlet));
        r.record(max_abs_diff(to_vector(rotate_two_spin(singlet_matrix_form(), rot)), singlet));
        r.record(max_abs_diff(generalized_singlet(random_basis(rng)), singlet));
    }
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
        const TwoSpinState trad = traditional_singlet(a);
        const TwoSpinState gen = generalized_singlet(OrthonormalBasis::of_axis(a));
        r.record(std::abs(std::abs(inner(trad, gen)) - 1.0));
        r.record(max_abs_diff(swap_spins(singlet), Complex(-1.0) * singlet));
    }
    return r;
}

const std::vector<double> kFieldValues{0.3, 1.0, 2.7};

template <typename Check>
void over_two_periods(Check check) {
    for (double J : kFieldValues) {
        const FieldParams p{J, 1.0};
        const double span = 2.0 * period(p);
        for (int i = 0; i < 1000; ++i) check(p, span * i / 999.0);
    }
}

SuiteResult amplitude_routes() {
    SuiteResult r{"amplitude_routes", 1e-12};
    over_two_periods([&](const FieldParams& p, double t) {
        const AmplitudePair proj = amplitudes(evolve_singlet(p, t));
        const AmplitudePair closed = amplitudes_closed_form(p, t);
        r.record(std::abs(proj.a - closed.a));
        r.record(std::abs(proj.b - closed.b));

        const TraceAmplitudes tr = trace_amplitudes(p, t);
        const Complex via_matrix = (singlet_matrix_form().adjoint() * matrix_form_evolution(p, t)).trace();
        const std::array<Complex, 4> routes{proj.a, Complex(tr.forward_via_operators),
                                            Complex(tr.backward_via_operators), via_matrix};
        for (std::size_t i = 0; i < routes.size(); ++i)
            for (std::size_t j = i + 1; j < routes.size(); ++j) r.record(std::abs(routes[i] - routes[j]));
        r.record(std::abs(tr.forward_via_metric - tr.forward_via_operators));
        r.record(std::abs(tr.backward_via_metric - tr.backward_via_operators));
        r.record(max_abs_diff(to_vector(matrix_form_evolution(p, t)), evolve_singlet(p, t)));
        r.record(max_abs_diff(to_vector(matrix_form_conjugate_evolution(p, t)),
                              conjugate_evolution(p, t)));
    });
    return r;
}

SuiteResult generators() {
    SuiteResult r{"generators", 1e-10};
    const TwoSpinState singlet = canonical_singlet();
    for (double J : {-1.3, 0.3, 1.0, 2.7}) {
        const FieldParams p{J, 1.0};
        const PairGenerators g = pair_generators(hamiltonian(p));
        r.record((g.independent * singlet).norm2());

        const double h = 1e-6 * p.hbar / std::max(std::abs(J), 1.0);
        const Matrix4 derivative =
            Complex(1.0 / (2.0 * h)) * (pair_evolution(p, h) - pair_evolution(p, -h));
        const Matrix4 generator = Complex(0.0, p.hbar) * derivative;
        r.record(max_abs_diff(generator, g.correlated) / std::max(std::abs(J), 1.0));
        r.record(std::abs(inner(triplet_z0(), g.correlated * singlet) + 2.0 * J));

        const Complex db = (amplitudes(evolve_singlet(p, h)).b - amplitudes(evolve_singlet(p, -h)).b) /
                           (2.0 * h);
        // db/dt(0) = 2iJ/hbar is held to the looser finite-difference bound.
        const double db_dev = std::abs(db - Complex(0.0, 2.0 * J / p.hbar));
        r.record(db_dev <= 1e-8 ? 0.0 : db_dev);
    }
    return r;
}

SuiteResult nodes_and_period() {
    SuiteResult r{"nodes_period", 1e-12};
    for (double J : kFieldValues) {
        const FieldParams p{J, 1.0};
        for (int k = 0; k < 8; ++k) {
            const double t_node = node_time(p, k);
            r.record(std::abs(amplitudes(evolve_singlet(p, t_node)).a));
            // Bisection on a(t) between the neighbouring extrema.
            double lo = t_node - 0.5 * period(p) / 2.0;
            double hi = t_node + 0.5 * period(p) / 2.0;
            auto a = [&](double t) { return amplitudes(evolve_singlet(p, t)).a.real(); };
            const double a_lo = a(lo);
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                if ((a(mid) > 0.0) == (a_lo > 0.0)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            r.record(std::abs(0.5 * (lo + hi) - t_node));
        }
        for (int i = 0; i < 200; ++i) {
            const double t = 3.0 * period(p) * i / 199.0;
            r.record(phase_free_deviation(evolve_singlet(p, t), evolve_singlet(p, t + period(p))));
        }
    }
    return r;
}

SuiteResult unitarity(std::uint64_t seed) {
    SuiteResult r{"unitarity", 1e-12};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> field(-5.0, 5.0);
    std::uniform_real_distribution<double> time(-10.0, 10.0);
    std::uniform_real_distribution<double> planck(0.5, 2.0);
    for (int i = 0; i < 10000; ++i) {
        const FieldParams p{field(rng), planck(rng)};
        const double t = time(rng);
        r.record(unitarity_defect(pair_evolution(p, t)));
        r.record(unitarity_defect(reversed_evolution(p, t)));
        const AmplitudePair amp = amplitudes(evolve_singlet(p, t));
        r.record(std::abs(std::norm(amp.a) + std::norm(amp.b) - 1.0));
    }
    return r;
}

SuiteResult clean_shell_collapse() {
    SuiteResult r{"clean_shell_collapse", 1e-14};
    for (double J : {0.0, 0.5}) {
        CleanParams p;
        p.j = J;
        for (int n : {0, 1, 2, 5}) {
            for (double R : log_grid(0.01, 3.0, 50)) {
                r.record(rel_err(laplace_term_clean(R, n, p), clean_kernel_term_r(R, n, p)));
            }
        }
    }
    return r;
}

template <typename Body>
void guarded(SuiteResult& r, Body body) {
    try {
        body();
    } catch (const QuadratureError& e) {
        r.failed = true;
        r.detail = e.what();
    }
}

SuiteResult dirty_laplace(const QuadratureConfig& quad) {
    SuiteResult r{"dirty_laplace", 1e-8};
    guarded(r, [&] {
        for (double J : {0.0, 0.5, 2.0}) {
            DirtyParams p;
            p.j = J;
            for (int n : {0, 1, 2}) {
                for (double R : log_grid(0.02, 8.0, 30)) {
                    r.record(rel_err(laplace_term_dirty(R, n, p, quad).value,
                                     dirty_kernel_term_r(R, n, p)));
                }
            }
        }
    });
    return r;
}

SuiteResult fourier(const QuadratureConfig& quad) {
    SuiteResult r{"fourier", 1e-6};
    guarded(r, [&] {
        for (double J : {0.0, 0.5, 2.0}) {
            CleanParams cp;
            cp.j = J;
            DirtyParams dp;
            dp.j = J;
            for (int n : {0, 1, 2, 5}) {
                for (double pm : log_grid(0.01, 100.0, 20)) {
                    r.record(rel_err(radial_fourier_term_clean(n, pm, cp, quad).value,
                                     clean_kernel_term_p(pm, n, cp)));
                    r.record(rel_err(radial_fourier_term_dirty(n, pm, dp, quad).value,
                                     dirty_kernel_term_p(pm, n, dp)));
                }
            }
        }
    });
    return r;
}

// Deviation here is the fraction of bins outside 3 sigma; it must stay <= 5%.
SuiteResult monte_carlo(const RunConfig& config, std::uint64_t seed) {
    SuiteResult r{"monte_carlo", 0.05};
    DirtyParams p = config.dirty_params();
    const double t = 1.0;
    const double spread = std::sqrt(6.0 * p.d * t);

    MCConfig mc;
    mc.n_paths = config.mc_paths;
    mc.seed = seed;
    for (int i = 0; i <= 24; ++i) mc.bin_edges.push_back(2.0 * spread * i / 24.0);

    const DiffusionHistogram h = mc_diffusion_correlator(t, p, mc, 1);
    int outside = 0;
    for (const RadialBin& bin : h.bins) {
        const double expected = (diffusion_radial_cdf(bin.hi, t, p.d) - diffusion_radial_cdf(bin.lo, t, p.d)) /
                                (bin.hi - bin.lo);
        if (std::abs(bin.density - expected) > 3.0 * bin.std_error) ++outside;
    }
    r.record(static_cast<double>(outside) / static_cast<double>(h.bins.size()));

    const double msd_sigma = std::abs(h.mean_squared_displacement - 6.0 * p.d * t) / h.msd_std_error;
    if (msd_sigma > 3.0) {
        r.failed = true;
        r.detail = "mean squared displacement off by " + format_number(msd_sigma) + " sigma";
    }

    for (unsigned threads : {2u, 3u, std::max(1u, config.threads)}) {
        const DiffusionHistogram other = mc_diffusion_correlator(t, p, mc, threads);
        bool same = other.mean_squared_displacement == h.mean_squared_displacement;
        for (std::size_t b = 0; b < h.bins.size(); ++b) same = same && other.bins[b].count == h.bins[b].count;
        if (!same) {
            r.failed = true;
            r.detail = "histogram depends on thread count";
        }
    }
    return r;
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::uint64_t seed = config.seed.value_or(kDefaultSeed);
    const QuadratureConfig quad = config.quadrature();

    std::vector<SuiteResult> suites;
    suites.push_back(singlet_invariance(seed));
    suites.push_back(amplitude_routes());
    suites.push_back(generators());
    suites.push_back(nodes_and_period());
    suites.push_back(unitarity(seed + 1));
    suites.push_back(clean_shell_collapse());
    suites.push_back(dirty_laplace(quad));
    suites.push_back(fourier(quad));
    suites.push_back(monte_carlo(config, seed + 2));

    const bool all_passed =
        std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });

    if (config.format.value_or(Format::Json) == Format::Csv) {
        Table table;
        table.command = "verify";
        table.columns = {"suite", "passed", "max_deviation", "threshold", "checks"};
        for (const auto& s : suites) {
            table.rows.push_back({s.name, std::string(s.passed() ? "true" : "false"),
                                  s.max_deviation, s.threshold, static_cast<double>(s.checks)});
        }
        write_csv(table, out);
    } else {
        out << "{\n  \"schema_version\": 1,\n  \"command\": \"verify\",\n  \"seed\": " << seed
            << ",\n  \"passed\": " << (all_passed ? "true" : "false") << ",\n  \"suites\": [";
        for (std::size_t i = 0; i < suites.size(); ++i) {
            const SuiteResult& s = suites[i];
            out << (i ? ",\n" : "\n") << "    {\"name\": \"" << s.name
                << "\", \"passed\": " << (s.passed() ? "true" : "false")
                << ", \"max_deviation\": " << format_number(s.max_deviation)
                << ", \"threshold\": " << format_number(s.threshold) << ", \"checks\": " << s.checks
                << ", \"detail\": \"" << json_escape(s.detail) << "\"}";
        }
        out << "\n  ]\n}\n";
    }

    for (const auto& s : suites) {
        if (!s.passed()) {
            err << "verify: suite '" << s.name << "' failed";
            if (!s.detail.empty()) err << ": " << s.detail;
            err << '\n';
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace singlet::cli
