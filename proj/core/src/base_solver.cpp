#include "fdsurr/base_solver.hpp"

#include <algorithm>
#include <cmath>

#include "fdsurr/errors.hpp"
#include "fdsurr/finite_difference.hpp"

namespace fdsurr {
namespace detail {

DescentStep descent_step(Oracle& oracle, const Vector& x, double fx, double sigma,
                         const SolverConfig& cfg, const PointSink& sink, StepCounters& counters) {
    const long n = static_cast<long>(x.size());
    DescentStep step;
    for (int i = 0; i < cfg.max_inner_halvings; ++i) {
        const double sigma_eff = std::ldexp(sigma, i);
        step.h = fd_step(cfg.epsilon, n, sigma_eff);
        step.i_k = i;

        ForwardGradient fd{Vector(n), {}};
        const std::int64_t before = oracle.eval_count();
        try {
            fd = forward_gradient(oracle, x, fx, step.h);
        } catch (const BudgetExhausted&) {
            // Partial level: the coordinates evaluated before the budget ran out.
            counters.difference_evals += oracle.eval_count() - before;
            throw;
        }
        counters.difference_evals += n;
        if (sink) {
            sink(fd.new_points);
        }
        step.g = std::move(fd.grad);

        const double g_norm = step.g.norm();
        if (g_norm < 0.8 * cfg.epsilon) {
            continue;
        }
        Vector trial = x - step.g / sigma_eff;
        const double f_trial = oracle.evaluate(trial);
        ++counters.trial_evals;
        if (fx - f_trial >= g_norm * g_norm / (8.0 * sigma_eff)) {
            step.success = true;
            step.x_plus = std::move(trial);
            step.f_plus = f_trial;
            return step;
        }
    }
    return step;
}

}  // namespace detail

SolverResult solve_base(Oracle& oracle, const Vector& x0, const SolverConfig& cfg) {
    cfg.validate();
    const long n = static_cast<long>(x0.size());
    if (x0.size() != oracle.dimension()) {
        throw DimensionMismatch(oracle.dimension(), x0.size());
    }

    SolverResult res;
    SolverTrace& trace = res.trace;
    trace.n = n;
    res.x_final = x0;
    trace.x_final = x0;
    try {
        trace.f_final = oracle.evaluate(x0);
        trace.initial_evals = 1;
    } catch (const BudgetExhausted&) {
        trace.status = SolverStatus::BudgetExhausted;
        return res;
    }

    Vector x = x0;
    double fx = trace.f_final;
    double sigma = cfg.sigma0;
    for (int k = 0;; ++k) {
        detail::StepCounters counters;
        detail::DescentStep step;
        try {
            step = detail::descent_step(oracle, x, fx, sigma, cfg, {}, counters);
        } catch (const BudgetExhausted&) {
            trace.unfinished_evals = counters.difference_evals + counters.trial_evals;
            trace.status = SolverStatus::BudgetExhausted;
            break;
        }
        trace.last_g = step.g;
        trace.last_h = step.h;
        if (!step.success) {
            trace.unfinished_evals = counters.difference_evals + counters.trial_evals;
            trace.status = SolverStatus::NearStationary;
            break;
        }

        IterationRecord rec;
        rec.k = k;
        rec.i_k = step.i_k;
        rec.sigma_k = sigma;
        rec.f_xk = fx;
        rec.f_trial = step.f_plus;
        rec.f_next = step.f_plus;
        rec.h = step.h;
        rec.grad_norm = step.g.norm();
        rec.difference_evals = counters.difference_evals;
        rec.trial_evals = counters.trial_evals;
        rec.cum_fe = oracle.eval_count();
        rec.x_k = x;
        trace.iterations.push_back(std::move(rec));

        x = std::move(step.x_plus);
        fx = step.f_plus;
        sigma = std::max(std::ldexp(sigma, step.i_k - 1), cfg.sigma_min);
    }
    res.x_final = x;
    trace.x_final = x;
    trace.f_final = fx;
    return res;
}

}  // namespace fdsurr
