#include "fdsurr/complexity.hpp"

#include <algorithm>
#include <cmath>

namespace fdsurr {

BoundConstants bound_constants(const SolverConfig& cfg, double L) {
    BoundConstants c;
    c.sigma_max = 2.0 * std::max(cfg.sigma0, 2.0 * L);
    c.C_f = 81.0 / 8.0 * std::max(c.sigma_max, L * L / cfg.sigma_min);
    c.C_max = std::max(c.C_f, cfg.gamma * c.sigma_max);
    return c;
}

Stationarity first_stationary(const SolverTrace& trace, const GradientFn& gradient, double eps) {
    Stationarity s;
    const auto K = static_cast<int>(trace.iterations.size());
    double t_sum = 0.0;
    std::int64_t fe = trace.initial_evals;
    for (int k = 0; k <= K; ++k) {
        const Vector& xk = k < K ? trace.iterations[static_cast<std::size_t>(k)].x_k : trace.x_final;
        if (gradient(xk).norm() <= eps) {
            s.reached = true;
            s.T = k;
            s.S = k > 0 ? t_sum / k : 0.0;
            s.fe = k > 0 ? fe : trace.total_evals();
            return s;
        }
        if (k < K) {
            const auto& it = trace.iterations[static_cast<std::size_t>(k)];
            t_sum += it.t_k;
            fe += it.difference_evals + it.trial_evals + it.surrogate_evals;
        }
    }
    return s;
}

FeBoundReport fe_bound_check(const SolverTrace& trace, const GradientFn& gradient, double L,
                             double f_low, const SolverConfig& cfg) {
    FeBoundReport r;
    r.stationarity = first_stationary(trace, gradient, cfg.epsilon);
    if (!r.stationarity.reached) {
        return r;
    }
    if (r.stationarity.T == 0) {
        r.fe_ok = r.T_ok = true;
        return r;
    }
    const BoundConstants c = bound_constants(cfg, L);
    const double n1 = static_cast<double>(trace.n + 1);
    const double S = r.stationarity.S;
    const double eta = (1.0 + S / (2.0 * n1)) / (1.0 + S);
    const double gap = trace.iterations.front().f_xk - f_low;
    const double eps2 = cfg.epsilon * cfg.epsilon;
    r.fe_bound = 4.0 * eta * n1 * c.C_max * gap / eps2 + std::log2(c.sigma_max / cfg.sigma0) * n1 +
                 r.stationarity.T;
    r.T_bound = 2.0 * c.C_max * gap / ((1.0 + S) * eps2);
    r.fe_ok = static_cast<double>(r.stationarity.fe) <= r.fe_bound;
    r.T_ok = static_cast<double>(r.stationarity.T) <= r.T_bound;
    return r;
}

StepDecreaseReport check_step_decrease(const SolverTrace& trace, const GradientFn& gradient,
                                       double L, const SolverConfig& cfg) {
    StepDecreaseReport r;
    const BoundConstants c = bound_constants(cfg, L);
    for (const auto& it : trace.iterations) {
        const double gnorm = gradient(it.x_k).norm();
        if (gnorm <= cfg.epsilon) {
            break;
        }
        ++r.checked;
        r.sigma_ok = r.sigma_ok && it.sigma_k <= c.sigma_max;
        r.decrease_ok = r.decrease_ok && it.f_xk - it.f_trial >= gnorm * gnorm / (2.0 * c.C_f);
    }
    return r;
}

bool check_surrogate_telescoping(const SolverTrace& trace, const SolverConfig& cfg) {
    const double eps2 = cfg.epsilon * cfg.epsilon;
    for (const auto& it : trace.iterations) {
        const double required = it.t_k * eps2 / (cfg.gamma * std::ldexp(it.sigma_k, it.i_k));
        if (!(it.f_trial - it.f_next >= required) || !(it.f_next <= it.f_xk)) {
            return false;
        }
    }
    return true;
}

}  // namespace fdsurr
