#include "fdsurr/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

namespace fdsurr {
namespace {

struct CurvaturePair {
    Vector s;
    Vector y;
    double rho;
};

Vector two_loop_direction(const std::deque<CurvaturePair>& pairs, const Vector& g) {
    Vector q = g;
    std::vector<double> a(pairs.size());
    for (std::size_t i = pairs.size(); i-- > 0;) {
        a[i] = pairs[i].rho * pairs[i].s.dot(q);
        q -= a[i] * pairs[i].y;
    }
    if (!pairs.empty()) {
        const auto& last = pairs.back();
        q *= last.s.dot(last.y) / last.y.squaredNorm();
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double b = pairs[i].rho * pairs[i].y.dot(q);
        q += (a[i] - b) * pairs[i].s;
    }
    return -q;
}

}  // namespace

LbfgsResult minimize_lbfgs(const ValueAndGradient& fg, Vector x0, const LbfgsConfig& cfg) {
    LbfgsResult res;
    res.x = std::move(x0);
    Vector g(res.x.size());
    res.f = fg(res.x, g);
    res.f_history.push_back(res.f);
    res.grad_norm0 = res.grad_norm = g.norm();
    if (!std::isfinite(res.f) || !std::isfinite(res.grad_norm)) {
        res.stop = LbfgsStop::NonFiniteStart;
        return res;
    }
    const double tol = cfg.grad_tol_rel * std::max(1.0, res.grad_norm0);
    if (res.grad_norm <= tol) {
        res.stop = LbfgsStop::GradientTolerance;
        return res;
    }

    std::deque<CurvaturePair> pairs;
    Vector x_new(res.x.size());
    Vector g_new(res.x.size());
    while (res.iterations < cfg.max_iters) {
        Vector d = two_loop_direction(pairs, g);
        double slope = g.dot(d);
        if (!(slope < 0.0)) {
            pairs.clear();
            d = -g;
            slope = -g.squaredNorm();
        }
        // Without curvature information the first trial step has unit length.
        double step = pairs.empty() ? std::min(1.0, 1.0 / d.norm()) : 1.0;

        bool accepted = false;
        double f_new = 0.0;
        for (int b = 0; b <= cfg.max_backtracks; ++b) {
            x_new = res.x + step * d;
            f_new = fg(x_new, g_new);
            if (f_new <= res.f + cfg.armijo_c * step * slope && std::isfinite(g_new.norm())) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (!pairs.empty()) {
                // Retry along steepest descent before giving up.
                pairs.clear();
                continue;
            }
            res.stop = LbfgsStop::LineSearchFailure;
            return res;
        }

        Vector s = x_new - res.x;
        Vector y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-10 * s.norm() * y.norm()) {
            pairs.push_back({std::move(s), std::move(y), 1.0 / sy});
            if (static_cast<int>(pairs.size()) > cfg.memory) {
                pairs.pop_front();
            }
        }
        res.x.swap(x_new);
        g.swap(g_new);
        res.f = f_new;
        res.grad_norm = g.norm();
        ++res.iterations;
        res.f_history.push_back(res.f);
        if (res.grad_norm <= tol) {
            res.stop = LbfgsStop::GradientTolerance;
            return res;
        }
    }
    res.stop = LbfgsStop::MaxIterations;
    return res;
}

}  // namespace fdsurr
