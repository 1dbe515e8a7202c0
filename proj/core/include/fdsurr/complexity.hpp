#pragma once

#include <cstdint>
#include <functional>

#include "fdsurr/config.hpp"
#include "fdsurr/trace.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

using GradientFn = std::function<Vector(const Vector&)>;

/// Worst-case constants for an L-smooth objective:
///   sigma_max = 2 max(sigma0, 2L)
///   C_f       = 81/8 max(sigma_max, L^2 / sigma_min)
///   C_max     = max(C_f, gamma sigma_max)
struct BoundConstants {
    double sigma_max = 0.0;
    double C_f = 0.0;
    double C_max = 0.0;
};

BoundConstants bound_constants(const SolverConfig& cfg, double L);

/// T(eps) and the evaluations spent to produce x_0..x_T.
struct Stationarity {
    bool reached = false;
    int T = 0;
    std::int64_t fe = 0;  ///< for T = 0 every evaluation of the run (the certificate)
    double S = 0.0;       ///< mean t_k over the first T iterations (0 when T = 0)
};

/// First k with ||grad f(x_k)|| <= eps among the recorded iterates and x_final.
Stationarity first_stationary(const SolverTrace& trace, const GradientFn& gradient, double eps);

struct FeBoundReport {
    Stationarity stationarity;
    double fe_bound = 0.0;  ///< 4 eta (n+1) C_max (f0 - f_low) / eps^2 + log2(sigma_max/sigma0)(n+1) + T
    double T_bound = 0.0;   ///< 2 C_max (f0 - f_low) / ((1 + S) eps^2)
    bool fe_ok = false;
    bool T_ok = false;
    /// The bounds presuppose T >= 1; a run that starts eps-stationary passes vacuously.
    [[nodiscard]] bool applicable() const { return stationarity.reached && stationarity.T >= 1; }
    [[nodiscard]] bool ok() const { return stationarity.reached && fe_ok && T_ok; }
};

/// Compares a run against the worst-case evaluation and iteration bounds,
/// using cfg.epsilon as the stationarity target.
FeBoundReport fe_bound_check(const SolverTrace& trace, const GradientFn& gradient, double L,
                             double f_low, const SolverConfig& cfg);

struct StepDecreaseReport {
    bool sigma_ok = true;     ///< sigma_k <= sigma_max
    bool decrease_ok = true;  ///< f(x_k) - f(x_k^+) >= ||grad f(x_k)||^2 / (2 C_f)
    int checked = 0;          ///< iterations with ||grad f(x_k)|| > eps
};

StepDecreaseReport check_step_decrease(const SolverTrace& trace, const GradientFn& gradient,
                                       double L, const SolverConfig& cfg);

/// f(x_k^+) - f(x_{k+1}) >= t_k eps^2 / (gamma 2^{i_k} sigma_k) and
/// f(x_{k+1}) <= f(x_k) on every iteration, compared exactly.
bool check_surrogate_telescoping(const SolverTrace& trace, const SolverConfig& cfg);

}  // namespace fdsurr
