#include "fdsurr/config.hpp"

#include "fdsurr/errors.hpp"

namespace fdsurr {

SolverConfig SolverConfig::defaults_for(long n) {
    SolverConfig cfg;
    cfg.cap_F = static_cast<std::size_t>(10 * (n + 1));
    return cfg;
}

void SolverConfig::validate() const {
    if (!(sigma0 > 0.0) || !(sigma_min > 0.0) || sigma0 < sigma_min) {
        throw NonPositiveInput("require sigma0 >= sigma_min > 0");
    }
    if (!(epsilon > 0.0) || !(rho > 0.0) || !(gamma > 0.0)) {
        throw NonPositiveInput("epsilon, rho and gamma must be positive");
    }
    if (!(lambda >= 0.0)) {
        throw NonPositiveInput("lambda must be non-negative");
    }
    if (cap_G == 0 || max_inner_halvings < 1) {
        throw NonPositiveInput("cap_G and max_inner_halvings must be positive");
    }
}

}  // namespace fdsurr
