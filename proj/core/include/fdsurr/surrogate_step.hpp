#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdsurr/dataset.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/surrogate.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

struct SurrogateStepParams {
    double sigma = 1.0;    ///< initial inverse step L_0, also scales the acceptance threshold
    double rho = 1e-4;
    double gamma = 12.5;
    double epsilon = 1e-5;
    int max_backtracks = 60;  ///< cap on l_t
    double zero_gradient_tol = 1e-14;
};

struct ModelBacktrack {
    Vector v_hat;
    int ell = 0;
};

/// Smallest l >= 0 such that v_hat = v - grad m(v) / (2^l L) satisfies
/// m(v) - m(v_hat) >= rho / (2^l L) ||grad m(v)||^2. Empty when no l up to
/// `max_backtracks` works.
std::optional<ModelBacktrack> model_backtrack(const SurrogateModel& model, const Vector& v,
                                              const Vector& grad, double L, double rho,
                                              int max_backtracks);

struct SurrogateOutcome {
    Vector v_plus;
    double f_v_plus = 0.0;
    int t_plus = 0;                      ///< accepted surrogate steps
    std::vector<ValueEntry> new_values;  ///< every point evaluated, accepted or not
    std::int64_t evals_used = 0;
    std::vector<int> ells;               ///< backtracking exponent of each attempted step
    bool budget_interrupted = false;
};

/// Gradient descent with Armijo backtracking on `model`, starting from
/// (v, fv). Each model step costs one true evaluation and is kept only if
/// f drops by at least epsilon^2 / (gamma sigma); the first failure stops
/// the loop. A vanishing model gradient or an exhausted backtracking cap
/// yields the null step v_hat = v_t, which fails the test.
SurrogateOutcome surrogate_descend(const Vector& v, double fv, Oracle& oracle,
                                   const SurrogateModel& model, const SurrogateStepParams& params);

}  // namespace fdsurr
