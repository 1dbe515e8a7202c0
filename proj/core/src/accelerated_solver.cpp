#include "fdsurr/accelerated_solver.hpp"

#include <algorithm>
#include <cmath>

#include "fdsurr/errors.hpp"
#include "fdsurr/surrogate_step.hpp"

namespace fdsurr {

std::shared_ptr<const SurrogateModel> RbfTrainer::train(const ValueDataset& F,
                                                        const GradDataset& G) {
    auto model = std::make_shared<RbfSurrogate>(fit_rbf(kernel_, F, G, sobolev_));
    if (!model->parameters().allFinite()) {
        return nullptr;
    }
    return model;
}

std::string RbfTrainer::name() const {
    return std::string("rbf-") + (sobolev_ ? "sobolev" : "plain") + ":" + kernel_.name();
}

NnTrainer::NnTrainer(long n, Activation activation, bool sobolev, double lambda,
                     std::uint64_t seed, LbfgsConfig lbfgs)
    : current_(init_nn(n, activation, seed)), sobolev_(sobolev), lambda_(lambda), lbfgs_(lbfgs) {}

std::shared_ptr<const SurrogateModel> NnTrainer::train(const ValueDataset& F,
                                                       const GradDataset& G) {
    const TrainingProblem problem{F, G, lambda_, sobolev_};
    NnTrainResult r = train_nn(current_, problem, lbfgs_);
    if (r.stop == LbfgsStop::NonFiniteStart || !std::isfinite(r.final_loss) ||
        !r.model.parameters().allFinite()) {
        return nullptr;
    }
    if (record_) {
        log_.emplace_back(current_.parameters(), r.model.parameters());
    }
    current_ = r.model;
    return std::make_shared<NnSurrogate>(std::move(r.model));
}

std::string NnTrainer::name() const {
    return std::string("nn-") + (sobolev_ ? "sobolev" : "plain") + ":" +
           current_.activation().name();
}

std::unique_ptr<SurrogateTrainer> make_trainer(const SurrogateFamily& family, bool sobolev, long n,
                                               double lambda, std::uint64_t seed) {
    if (family.kind == SurrogateFamily::Kind::Rbf) {
        return std::make_unique<RbfTrainer>(family.kernel, sobolev);
    }
    return std::make_unique<NnTrainer>(n, family.activation, sobolev, lambda, seed);
}

SolverResult solve_accelerated(Oracle& oracle, const Vector& x0, const SolverConfig& cfg,
                               SurrogateTrainer& trainer) {
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

    ValueDataset F(cfg.value_cap(n));
    GradDataset G(cfg.cap_G);
    F.insert(x0, trace.f_final);

    const auto sink = [&F](const std::vector<ValueEntry>& points) {
        for (const auto& p : points) {
            F.insert(p.point, p.value);
        }
    };

    Vector x = x0;
    double fx = trace.f_final;
    double sigma = cfg.sigma0;
    for (int k = 0;; ++k) {
        detail::StepCounters counters;
        detail::DescentStep step;
        try {
            step = detail::descent_step(oracle, x, fx, sigma, cfg, sink, counters);
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
        F.insert(step.x_plus, step.f_plus);
        G.insert(x, step.g, step.h);

        const double sigma_eff = std::ldexp(sigma, step.i_k);
        SurrogateOutcome outcome;
        outcome.v_plus = step.x_plus;
        outcome.f_v_plus = step.f_plus;
        bool ran = false;
        if (oracle.exhausted()) {
            outcome.budget_interrupted = true;
        } else if (auto model = trainer.train(F, G)) {
            outcome = surrogate_descend(step.x_plus, step.f_plus, oracle, *model,
                                        {sigma_eff, cfg.rho, cfg.gamma, cfg.epsilon});
            ran = true;
        }
        for (const auto& p : outcome.new_values) {
            F.insert(p.point, p.value);
        }

        IterationRecord rec;
        rec.k = k;
        rec.i_k = step.i_k;
        rec.sigma_k = sigma;
        rec.t_k = outcome.t_plus;
        rec.f_xk = fx;
        rec.f_trial = step.f_plus;
        rec.f_next = outcome.f_v_plus;
        rec.h = step.h;
        rec.grad_norm = step.g.norm();
        rec.difference_evals = counters.difference_evals;
        rec.trial_evals = counters.trial_evals;
        rec.surrogate_evals = outcome.evals_used;
        rec.cum_fe = oracle.eval_count();
        rec.surrogate_ran = ran;
        rec.value_set_size = F.size();
        rec.grad_set_size = G.size();
        rec.x_k = x;
        trace.iterations.push_back(std::move(rec));

        x = std::move(outcome.v_plus);
        fx = outcome.f_v_plus;
        sigma = std::max(std::ldexp(sigma, step.i_k - 1), cfg.sigma_min);
        if (outcome.budget_interrupted) {
            trace.status = SolverStatus::BudgetExhausted;
            break;
        }
    }
    res.x_final = x;
    trace.x_final = x;
    trace.f_final = fx;
    return res;
}

SolverResult solve_accelerated(Oracle& oracle, const Vector& x0, const SolverConfig& cfg,
                               const SurrogateFamily& family, bool sobolev, std::uint64_t seed) {
    auto trainer = make_trainer(family, sobolev, static_cast<long>(x0.size()), cfg.lambda, seed);
    return solve_accelerated(oracle, x0, cfg, *trainer);
}

double average_surrogate_steps(const SolverTrace& trace) {
    if (trace.iterations.empty()) {
        throw EmptyTrace();
    }
    double sum = 0.0;
    for (const auto& it : trace.iterations) {
        sum += it.t_k;
    }
    return sum / static_cast<double>(trace.iterations.size());
}

double surrogate_gain_of(double S, long n) {
    return (1.0 + S / (2.0 * static_cast<double>(n + 1))) / (1.0 + S);
}

double surrogate_gain(const SolverTrace& trace, long n) {
    return surrogate_gain_of(average_surrogate_steps(trace), n);
}

}  // namespace fdsurr
