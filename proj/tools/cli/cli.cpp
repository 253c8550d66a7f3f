#include "cli.hpp"

#include "table.hpp"

#include "singlet/evolution.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

namespace singlet::cli {

namespace {

double parse_scalar(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    double factor = 1.0;
    if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
        factor = std::numbers::pi;
        text.resize(text.size() - 2);
        if (text.empty() || text == "+") return factor;
        if (text == "-") return -factor;
    }
    std::istringstream in(text);
    in.imbue(std::locale::classic());
    double value = 0.0;
    in >> value;
    if (in.fail() || !in.eof()) throw ValidationError("cannot parse number '" + text + "'");
    return value * factor;
}

void emit(const Table& table, Format format, std::ostream& out) {
    if (format == Format::Json) {
        write_json(table, out);
    } else {
        write_csv(table, out);
    }
}

FieldParams field_params(const RunConfig& c) { return {c.J, c.hbar}; }

}  // namespace

std::vector<double> Grid::points() const {
    std::vector<double> p(static_cast<std::size_t>(count));
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = start + i * step;
    p.back() = stop;
    return p;
}

Grid parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
        throw ValidationError("grid must be start:stop:count, got '" + text + "'");
    }
    Grid g;
    g.start = parse_scalar(text.substr(0, first));
    g.stop = parse_scalar(text.substr(first + 1, second - first - 1));
    const double count = parse_scalar(text.substr(second + 1));
    if (count != std::floor(count) || count > 1e8) {
        throw ValidationError("grid count must be an integer");
    }
    g.count = static_cast<int>(count);
    return g;
}

void RunConfig::validate() const {
    if (command == Command::Verify) {
        if (rel_tol && !(*rel_tol > 0.0)) throw ValidationError("--rel-tol must be > 0");
        if (mc_paths < 1) throw ValidationError("--paths must be >= 1");
        return;
    }
    if (!grid) throw ValidationError("--grid start:stop:count is required");
    if (grid->count < 2) throw ValidationError("grid count must be >= 2");
    if (!std::isfinite(grid->start) || !std::isfinite(grid->stop) || !(grid->stop > grid->start)) {
        throw ValidationError("grid stop must exceed start");
    }
    if (command == Command::Evolve) {
        field_params(*this).validate();
        return;
    }
    if (!(grid->start > 0.0)) throw ValidationError("R and p grids must start above 0");
    if (n_max < 0) throw ValidationError("--nmax must be >= 0");
    if (limit == Limit::Clean) {
        clean_params().validate();
    } else {
        dirty_params().validate();
    }
}

CleanParams RunConfig::clean_params() const { return {n0, g_abs, t_c, v_f, J, hbar}; }
DirtyParams RunConfig::dirty_params() const { return {n0, g_abs, t_c, d, J, hbar}; }

QuadratureConfig RunConfig::quadrature() const {
    QuadratureConfig q;
    if (rel_tol) q.rel_tol = *rel_tol;
    return q;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
    RunConfig c;
    CLI::App app{"Two-spin singlet dynamics and superconducting pair kernels"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    const std::map<std::string, Command> commands{
        {"evolve", Command::Evolve}, {"kernel", Command::Kernel}, {"verify", Command::Verify}};
    const std::map<std::string, Limit> limits{{"clean", Limit::Clean}, {"dirty", Limit::Dirty}};
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
    const std::map<std::string, Space> spaces{{"r", Space::Coordinate}, {"p", Space::Momentum}};

    std::string grid_text;
    Format format = Format::Csv;
    std::uint64_t seed = 0;

    app.add_option("--command", c.command, "evolve | kernel | verify")
        ->required()
        ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
    app.add_option("--limit", c.limit, "clean | dirty (kernel)")
        ->transform(CLI::CheckedTransformer(limits, CLI::ignore_case));
    app.add_option("--space", c.space, "r | p: coordinate or momentum kernel")
        ->transform(CLI::CheckedTransformer(spaces, CLI::ignore_case));
    app.add_option("--J", c.J, "exchange field J (energy)");
    app.add_option("--hbar", c.hbar, "reduced Planck constant");
    app.add_option("--Tc", c.t_c, "critical temperature T_c (energy)");
    app.add_option("--vF", c.v_f, "Fermi velocity (clean limit)");
    app.add_option("--D", c.d, "diffusion coefficient (dirty limit)");
    app.add_option("--N0", c.n0, "density of states N(0)");
    app.add_option("--g", c.g_abs, "coupling |g|");
    app.add_option("--nmax", c.n_max, "highest Matsubara index n (sums run over 0..nmax)");
    auto* grid_opt = app.add_option("--grid", grid_text, "start:stop:count, 'pi' allowed");
    auto* format_opt = app.add_option("--format", format, "csv | json")
                           ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--out", c.output_path, "output file (default: standard output)");
    auto* seed_opt = app.add_option("--seed", seed, "random seed for verify");
    double rel_tol = 0.0;
    auto* tol_opt = app.add_option("--rel-tol", rel_tol, "quadrature relative tolerance (verify)");
    app.add_option("--paths", c.mc_paths, "Monte Carlo paths (verify)");
    app.add_option("--threads", c.threads, "worker threads for Monte Carlo (verify)");

    std::vector<const char*> argv{"singlet"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        exit_code = kExitUsage;
        return std::nullopt;
    }

    try {
        if (*grid_opt) c.grid = parse_grid(grid_text);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        exit_code = kExitUsage;
        return std::nullopt;
    }
    if (*format_opt) c.format = format;
    if (*seed_opt) c.seed = seed;
    if (*tol_opt) c.rel_tol = rel_tol;
    exit_code = kExitOk;
    return c;
}

int run_evolve(const RunConfig& config, std::ostream& out) {
    const FieldParams p = field_params(config);
    const Grid& grid = *config.grid;

    std::vector<double> times = grid.points();
    if (p.J != 0.0) {
        const double scale = std::numbers::pi * p.hbar / (4.0 * std::abs(p.J));
        const auto k_lo = static_cast<long long>(std::ceil((grid.start / scale - 1.0) / 2.0));
        for (long long k = k_lo;; ++k) {
            const double t = (2.0 * static_cast<double>(k) + 1.0) * scale;
            if (t > grid.stop) break;
            if (t < grid.start) continue;
            const bool present = std::any_of(times.begin(), times.end(), [t](double x) {
                return std::abs(x - t) <= 1e-12 * std::max(1.0, std::abs(t));
            });
            if (!present) times.push_back(t);
        }
        std::sort(times.begin(), times.end());
    }

    Table table;
    table.command = "evolve";
    table.columns = {"t", "re_a", "im_a", "re_b", "im_b", "p_singlet", "p_triplet", "p_flip",
                     "p_orient", "branch"};
    for (double t : times) {
        const AmplitudePair amp = amplitudes(evolve_singlet(p, t));
        table.rows.push_back({t, amp.a.real(), amp.a.imag(), amp.b.real(), amp.b.imag(),
                              std::norm(amp.a), std::norm(amp.b), flip_probability(p, t),
                              orientation_probability(p, t), std::string(to_string(branch(p, t)))});
    }
    emit(table, config.format.value_or(Format::Csv), out);
    return kExitOk;
}

int run_kernel(const RunConfig& config, std::ostream& out) {
    const bool clean = config.limit == Limit::Clean;
    const bool coordinate = config.space == Space::Coordinate;
    const CleanParams cp = config.clean_params();
    const DirtyParams dp = config.dirty_params();

    Table table;
    table.command = "kernel";
    table.columns.push_back(coordinate ? "R" : "p");
    for (int n = 0; n <= config.n_max; ++n) table.columns.push_back("term_" + std::to_string(n));
    table.columns.push_back("sum");
    if (coordinate && clean) table.columns.push_back("cos_factor");
    if (coordinate && !clean) {
        for (int n = 0; n <= config.n_max; ++n) {
            table.columns.push_back("spin_factor_" + std::to_string(n));
        }
    }

    for (double x : config.grid->points()) {
        std::vector<Cell> row{x};
        double sum = 0.0;
        for (int n = 0; n <= config.n_max; ++n) {
            double term = 0.0;
            if (clean) {
                term = coordinate ? clean_kernel_term_r(x, n, cp) : clean_kernel_term_p(x, n, cp);
            } else {
                term = coordinate ? dirty_kernel_term_r(x, n, dp) : dirty_kernel_term_p(x, n, dp);
            }
            sum += term;
            row.emplace_back(term);
        }
        row.emplace_back(sum);
        if (coordinate && clean) row.emplace_back(clean_spin_factor(x, cp));
        if (coordinate && !clean) {
            for (int n = 0; n <= config.n_max; ++n) row.emplace_back(dirty_spin_factor(x, n, dp));
        }
        table.rows.push_back(std::move(row));
    }
    emit(table, config.format.value_or(Format::Csv), out);
    return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        config.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output_path.empty()) {
        file.open(config.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << config.output_path << "' for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }
    sink->imbue(std::locale::classic());

    try {
        switch (config.command) {
            case Command::Evolve: return run_evolve(config, *sink);
            case Command::Kernel: return run_kernel(config, *sink);
            case Command::Verify: return run_verify(config, *sink, err);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    int code = kExitOk;
    const auto config = parse_args(args, out, err, code);
    if (!config) return code;
    return run(*config, out, err);
}

}  // namespace singlet::cli
