#pragma once

// Command-line front end: evolution traces, kernel profiles and the
// verification report.

#include "singlet/kernel.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace singlet::cli {

enum class Command { Evolve, Kernel, Verify };
enum class Format { Csv, Json };
enum class Space { Coordinate, Momentum };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    std::vector<double> points() const;
};

struct RunConfig {
    Command command = Command::Verify;
    Limit limit = Limit::Clean;
    Space space = Space::Coordinate;

    double J = 1.0;
    double hbar = 1.0;
    double t_c = 1.0;
    double v_f = 1.0;
    double d = 1.0;
    double n0 = 1.0;
    double g_abs = 1.0;
    int n_max = 3;

    std::optional<Grid> grid;
    std::optional<Format> format;  // csv for tables, json for verify when unset
    std::string output_path;       // empty: standard output
    std::optional<std::uint64_t> seed;

    std::optional<double> rel_tol;
    std::int64_t mc_paths = 100000;
    unsigned threads = 1;

    /// Throws ValidationError on inconsistent settings.
    void validate() const;

    CleanParams clean_params() const;
    DirtyParams dirty_params() const;
    QuadratureConfig quadrature() const;
};

/// Parses "start:stop:count". Start and stop accept a trailing or bare "pi"
/// factor, e.g. "0:pi:9" or "0.25pi:2pi:50".
Grid parse_grid(const std::string& text);

/// Parses argv into a config. Returns std::nullopt after printing help or a
/// usage error to `err`; `exit_code` then holds the code to return.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code);

int run_evolve(const RunConfig& config, std::ostream& out);
int run_kernel(const RunConfig& config, std::ostream& out);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command, writing to config.output_path or `out`.
/// Returns the process exit code; configuration errors give kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singlet::cli
