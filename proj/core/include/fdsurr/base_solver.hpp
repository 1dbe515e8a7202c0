#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fdsurr/config.hpp"
#include "fdsurr/dataset.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/trace.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

struct SolverResult {
    Vector x_final;
    SolverTrace trace;
};

/// Finite-difference gradient descent with doubling backtracking on sigma.
/// Returns cleanly with status BudgetExhausted when the oracle runs out.
SolverResult solve_base(Oracle& oracle, const Vector& x0, const SolverConfig& cfg);

namespace detail {

/// Evaluations made inside one outer step, counted call by call.
struct StepCounters {
    std::int64_t difference_evals = 0;
    std::int64_t trial_evals = 0;
};

struct DescentStep {
    bool success = false;  ///< false when max_inner_halvings levels all failed
    int i_k = 0;
    Vector g;              ///< difference gradient of the last level computed
    double h = 0.0;
    Vector x_plus;
    double f_plus = 0.0;
};

using PointSink = std::function<void(const std::vector<ValueEntry>&)>;

/// Step 1 of the outer iteration at (x, fx): for i = 0, 1, ... recompute the
/// forward-difference gradient with h_i, skip levels whose gradient norm is
/// below 4 epsilon / 5, and accept the first trial x - g / (2^i sigma) with
/// sufficient decrease. Difference points of every level go to `sink`.
/// BudgetExhausted propagates; `counters` stays accurate regardless.
DescentStep descent_step(Oracle& oracle, const Vector& x, double fx, double sigma,
                         const SolverConfig& cfg, const PointSink& sink, StepCounters& counters);

}  // namespace detail
}  // namespace fdsurr
