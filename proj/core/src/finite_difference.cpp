#include "fdsurr/finite_difference.hpp"

#include <cmath>

#include "fdsurr/errors.hpp"

namespace fdsurr {

double fd_step(double epsilon, long n, double sigma_eff) {
    if (!(epsilon > 0.0) || n < 1 || !(sigma_eff > 0.0)) {
        throw NonPositiveInput("fd_step requires epsilon, n and sigma_eff > 0");
    }
    return 2.0 * epsilon / (5.0 * std::sqrt(static_cast<double>(n)) * sigma_eff);
}

ForwardGradient forward_gradient(Oracle& oracle, const Vector& x, double fx, double h) {
    if (!(h > 0.0)) {
        throw NonPositiveInput("difference step must be positive");
    }
    if (x.size() != oracle.dimension()) {
        throw DimensionMismatch(oracle.dimension(), x.size());
    }
    const Eigen::Index n = x.size();
    ForwardGradient out{Vector(n), {}};
    out.new_points.reserve(static_cast<std::size_t>(n));
    Vector probe = x;
    for (Eigen::Index j = 0; j < n; ++j) {
        probe[j] = x[j] + h;
        const double fj = oracle.evaluate(probe);
        out.grad[j] = (fj - fx) / h;
        out.new_points.push_back({probe, fj});
        probe[j] = x[j];
    }
    return out;
}

}  // namespace fdsurr
