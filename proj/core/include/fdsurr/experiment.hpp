#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fdsurr/config.hpp"
#include "fdsurr/profiles.hpp"
#include "fdsurr/trace.hpp"

namespace fdsurr {

/// Solver names understood by the harness.
inline const std::vector<std::string>& known_solvers() {
    static const std::vector<std::string> names{"base", "rbf-sobolev", "rbf-plain", "nn-sobolev",
                                                "nn-plain"};
    return names;
}

struct ExperimentConfig {
    std::vector<std::string> problems;  ///< empty selects the whole suite
    std::vector<std::string> solvers = known_solvers();
    int budget_simplex = 100;
    std::uint64_t seed = 1;
    double tau = 1e-4;
    std::string kernel = "gaussian";
    std::string activation = "softplus";
    SolverConfig solver;      ///< cap_F is derived per problem from cap_f_factor
    long cap_f_factor = 10;   ///< cap_F = cap_f_factor (n + 1)
    int threads = 0;          ///< 0 uses the hardware concurrency

    /// Throws ConfigError on unknown solvers, kernels, activations or problems.
    void validate() const;
};

/// Parses the flat `key = value` format; `#` starts a comment. Throws ConfigError.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunRecord {
    std::string problem;
    std::string solver;
    long n = 0;
    SolverTrace trace;
    std::vector<double> history;  ///< every evaluated value, in order
};

struct GainRow {
    std::string problem;
    std::string solver;
    double S = 0.0;
    double eta = 1.0;
};

/// Per-problem surrogate gains over the completed iterations of each trace
/// (traces without a completed iteration are skipped), plus their box summary.
struct GainDistribution {
    std::vector<double> etas;
    BoxSummary summary;
};

GainDistribution gain_distribution(const std::vector<const SolverTrace*>& traces);

struct ExperimentResult {
    std::vector<RunRecord> runs;  ///< problem-major, solvers in config order
    ProfileTable table;
    std::vector<ProfileCurve> curves;
    std::vector<GainRow> gains;   ///< surrogate solvers only
    std::map<std::string, GainDistribution> gain_by_solver;
};

/// Runs every (problem, solver) cell on a worker pool. Cells own their oracle
/// and seed, so the result does not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Writes traces/<problem>_<solver>.csv, profiles.csv, gains.csv,
/// gain_summary.csv, convergence.csv and profiles.svg under `out`.
void write_artifacts(const ExperimentResult& result, const ExperimentConfig& cfg,
                     const std::filesystem::path& out);

/// Minimal step-plot rendering of the profile curves.
void write_profile_svg(std::ostream& out, const std::vector<ProfileCurve>& curves,
                       double budget_simplex);

}  // namespace fdsurr
