#pragma once

#include <functional>
#include <vector>

#include "fdsurr/types.hpp"

namespace fdsurr {

struct LbfgsConfig {
    int memory = 10;
    int max_iters = 1000;
    double grad_tol_rel = 1e-6;  ///< stop when ||g|| <= tol * max(1, ||g_0||)
    double armijo_c = 1e-4;
    int max_backtracks = 50;     ///< step halvings per line search
};

enum class LbfgsStop { GradientTolerance, MaxIterations, LineSearchFailure, NonFiniteStart };

struct LbfgsResult {
    Vector x;
    double f = 0.0;
    int iterations = 0;
    LbfgsStop stop = LbfgsStop::MaxIterations;
    double grad_norm0 = 0.0;
    double grad_norm = 0.0;
    std::vector<double> f_history;  ///< objective after each accepted iterate, starting at x0
};

/// Fills `grad` and returns the objective value at x.
using ValueAndGradient = std::function<double(const Vector& x, Vector& grad)>;

/// Limited-memory BFGS with a backtracking Armijo line search. Accepted
/// iterates never increase the objective; on line-search failure the best
/// iterate so far is returned. The curvature history starts empty on every call.
LbfgsResult minimize_lbfgs(const ValueAndGradient& fg, Vector x0, const LbfgsConfig& cfg);

}  // namespace fdsurr
