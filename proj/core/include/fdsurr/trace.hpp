#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fdsurr/types.hpp"

namespace fdsurr {

enum class SolverStatus {
    Running,
    NearStationary,   ///< max_inner_halvings levels in a row without a step
    BudgetExhausted,
};

std::string to_string(SolverStatus status);

/// One completed outer iteration.
struct IterationRecord {
    int k = 0;
    int i_k = 0;            ///< halvings before the successful level
    double sigma_k = 0.0;
    int t_k = 0;            ///< successful surrogate steps (always 0 for the base method)
    double f_xk = 0.0;      ///< f(x_k)
    double f_trial = 0.0;   ///< f(x_k^+), the accepted finite-difference step
    double f_next = 0.0;    ///< f(x_{k+1})
    double h = 0.0;         ///< difference step of the successful level
    double grad_norm = 0.0; ///< ||g_h(x_k)|| at the successful level
    std::int64_t difference_evals = 0;
    std::int64_t trial_evals = 0;
    std::int64_t surrogate_evals = 0;
    std::int64_t cum_fe = 0;  ///< oracle count at the end of the iteration
    bool surrogate_ran = false;
    std::size_t value_set_size = 0;  ///< |F| after the iteration (accelerated runs)
    std::size_t grad_set_size = 0;   ///< |G| after the iteration (accelerated runs)
    Vector x_k;
};

/// Per-run record used for bound verification, profiles and CSV output.
struct SolverTrace {
    long n = 0;
    std::int64_t initial_evals = 0;     ///< f(x_0)
    std::vector<IterationRecord> iterations;
    std::int64_t unfinished_evals = 0;  ///< evaluations of the final, incomplete iteration
    SolverStatus status = SolverStatus::Running;
    Vector x_final;
    double f_final = 0.0;
    Vector last_g;      ///< last difference gradient computed
    double last_h = 0.0;

    /// Sum of every itemized evaluation; equals the oracle count of the run.
    [[nodiscard]] std::int64_t total_evals() const;
};

/// Writes the `k,i_k,sigma_k,t_k,f_xk,cum_fe` CSV.
void write_trace_csv(std::ostream& out, const SolverTrace& trace);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace fdsurr
