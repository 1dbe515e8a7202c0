#include "fdsurr/trace.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace fdsurr {

std::string to_string(SolverStatus status) {
    switch (status) {
        case SolverStatus::Running: return "running";
        case SolverStatus::NearStationary: return "near_stationary";
        case SolverStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "unknown";
}

std::int64_t SolverTrace::total_evals() const {
    std::int64_t total = initial_evals + unfinished_evals;
    for (const auto& it : iterations) {
        total += it.difference_evals + it.trial_evals + it.surrogate_evals;
    }
    return total;
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

void write_trace_csv(std::ostream& out, const SolverTrace& trace) {
    out << "k,i_k,sigma_k,t_k,f_xk,cum_fe\n";
    for (const auto& it : trace.iterations) {
        out << it.k << ',' << it.i_k << ',' << format_double(it.sigma_k) << ',' << it.t_k << ','
            << format_double(it.f_xk) << ',' << it.cum_fe << '\n';
    }
}

}  // namespace fdsurr
