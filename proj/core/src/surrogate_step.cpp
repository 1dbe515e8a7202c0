#include "fdsurr/surrogate_step.hpp"

#include <cmath>

#include "fdsurr/errors.hpp"

namespace fdsurr {

std::optional<ModelBacktrack> model_backtrack(const SurrogateModel& model, const Vector& v,
                                              const Vector& grad, double L, double rho,
                                              int max_backtracks) {
    const double m_v = model.value(v);
    const double g2 = grad.squaredNorm();
    double inv_step = L;
    for (int ell = 0; ell <= max_backtracks; ++ell) {
        Vector v_hat = v - grad / inv_step;
        const double decrease = m_v - model.value(v_hat);
        if (decrease >= rho / inv_step * g2) {
            return ModelBacktrack{std::move(v_hat), ell};
        }
        inv_step *= 2.0;
    }
    return std::nullopt;
}

SurrogateOutcome surrogate_descend(const Vector& v, double fv, Oracle& oracle,
                                   const SurrogateModel& model, const SurrogateStepParams& params) {
    if (!(params.sigma > 0.0) || !(params.rho > 0.0) || !(params.gamma > 0.0) ||
        !(params.epsilon > 0.0)) {
        throw NonPositiveInput("surrogate step constants must be positive");
    }
    const double threshold = params.epsilon * params.epsilon / (params.gamma * params.sigma);

    SurrogateOutcome out;
    out.v_plus = v;
    out.f_v_plus = fv;
    double L = params.sigma;
    while (true) {
        const Vector grad = model.spatial_gradient(out.v_plus);
        Vector v_hat = out.v_plus;
        int ell = 0;
        if (grad.norm() > params.zero_gradient_tol) {
            if (auto bt = model_backtrack(model, out.v_plus, grad, L, params.rho,
                                          params.max_backtracks)) {
                v_hat = std::move(bt->v_hat);
                ell = bt->ell;
            } else {
                ell = params.max_backtracks;
            }
        }
        out.ells.push_back(ell);

        double f_hat = 0.0;
        try {
            f_hat = oracle.evaluate(v_hat);
        } catch (const BudgetExhausted&) {
            out.budget_interrupted = true;
            return out;
        }
        ++out.evals_used;
        out.new_values.push_back({v_hat, f_hat});

        if (out.f_v_plus - f_hat >= threshold) {
            out.v_plus = std::move(v_hat);
            out.f_v_plus = f_hat;
            ++out.t_plus;
            L = std::ldexp(L, ell - 1);
        } else {
            return out;
        }
    }
}

}  // namespace fdsurr
