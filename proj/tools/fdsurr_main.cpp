// Command-line driver for the benchmark harness.
//
//   fdsurr run --config <path> --out <dir> [--seed <u64>] [--budget-simplex <int>]
//              [--solvers base,rbf-sobolev,...] [--kernel <name>] [--activation <name>]
//   fdsurr problems

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fdsurr/errors.hpp"
#include "fdsurr/experiment.hpp"
#include "fdsurr/problems.hpp"
#include "fdsurr/trace.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-difference DFO with surrogate acceleration: benchmark driver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> budget;
    std::optional<std::string> solvers;
    std::optional<std::string> kernel;
    std::optional<std::string> activation;

    auto* run = app.add_subcommand("run", "Run the data-profile experiment");
    run->add_option("--config", config_path, "Experiment config file (key = value)")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--seed", seed, "Seed for surrogate initialization");
    run->add_option("--budget-simplex", budget, "Budget in simplex gradients (n + 1 evaluations)");
    run->add_option("--solvers", solvers,
                    "Comma list of base,rbf-sobolev,rbf-plain,nn-sobolev,nn-plain");
    run->add_option("--kernel", kernel, "RBF kernel: gaussian|multiquadratic|cubic");
    run->add_option("--activation", activation, "NN activation: softplus|sigmoid|silu");

    auto* list = app.add_subcommand("problems", "List the built-in test problems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*list) {
            for (const auto& p : fdsurr::standard_suite()) {
                std::cout << p.name << " n=" << p.n << '\n';
            }
            return 0;
        }

        fdsurr::ExperimentConfig cfg = fdsurr::load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (budget) cfg.budget_simplex = *budget;
        if (solvers) cfg.solvers = split_commas(*solvers);
        if (kernel) cfg.kernel = *kernel;
        if (activation) cfg.activation = *activation;
        cfg.validate();

        const auto result = fdsurr::run_experiment(cfg);
        fdsurr::write_artifacts(result, cfg, out_dir);

        for (const auto& c : result.curves) {
            std::cout << c.solver << ": solved " << fdsurr::format_double(c.final_fraction())
                      << " of " << result.table.problems.size() << " problems";
            if (auto it = result.gain_by_solver.find(c.solver); it != result.gain_by_solver.end()) {
                std::cout << ", median eta " << fdsurr::format_double(it->second.summary.median);
            }
            std::cout << '\n';
        }
    } catch (const fdsurr::Error& e) {
        std::cerr << "fdsurr: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fdsurr: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
