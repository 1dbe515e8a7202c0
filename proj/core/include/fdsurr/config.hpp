#pragma once

#include <cstddef>

namespace fdsurr {

/// Parameters shared by the base and the surrogate-accelerated solver.
struct SolverConfig {
    double sigma0 = 1.0;
    double sigma_min = 1e-2;
    double epsilon = 1e-5;
    double rho = 1e-4;
    double gamma = 12.5;
    double lambda = 1e-4;   ///< NN weight penalty; the RBF fit always uses 0
    std::size_t cap_F = 0;  ///< 0 selects 10 (n + 1)
    std::size_t cap_G = 10;
    int max_inner_halvings = 60;

    /// Defaults with cap_F resolved for dimension n.
    static SolverConfig defaults_for(long n);

    [[nodiscard]] std::size_t value_cap(long n) const {
        return cap_F != 0 ? cap_F : static_cast<std::size_t>(10 * (n + 1));
    }

    /// Throws NonPositiveInput when any field is out of range.
    void validate() const;
};

}  // namespace fdsurr
