#pragma once

#include <vector>

#include "fdsurr/dataset.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

/// Difference step for accuracy epsilon in dimension n at effective
/// curvature estimate sigma_eff: 2 epsilon / (5 sqrt(n) sigma_eff).
double fd_step(double epsilon, long n, double sigma_eff);

struct ForwardGradient {
    Vector grad;
    std::vector<ValueEntry> new_points;  ///< (x + h e_j, f(x + h e_j)), j = 1..n
};

/// Forward-difference gradient at x using the known value fx. Consumes
/// exactly n evaluations; BudgetExhausted propagates from the oracle.
ForwardGradient forward_gradient(Oracle& oracle, const Vector& x, double fx, double h);

}  // namespace fdsurr
