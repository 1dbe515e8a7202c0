#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "fdsurr/types.hpp"

namespace fdsurr {

using Objective = std::function<double(const Vector&)>;

/// Black-box access to an objective. Every evaluation in the library goes
/// through `evaluate`, which is the only place evaluations are counted.
class Oracle {
public:
    Oracle(Objective objective, Eigen::Index dimension,
           std::optional<std::int64_t> budget = std::nullopt);

    /// Returns f(x). Throws BudgetExhausted when the budget is spent and
    /// DimensionMismatch when x has the wrong size.
    double evaluate(const Vector& x);

    [[nodiscard]] Eigen::Index dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::int64_t eval_count() const noexcept { return eval_count_; }
    [[nodiscard]] std::optional<std::int64_t> budget() const noexcept { return budget_; }
    [[nodiscard]] bool exhausted() const noexcept {
        return budget_.has_value() && eval_count_ >= *budget_;
    }

    /// Value returned by the i-th evaluation, in call order.
    [[nodiscard]] const std::vector<double>& history() const noexcept { return history_; }
    [[nodiscard]] double best_value() const noexcept { return best_value_; }

private:
    Objective objective_;
    Eigen::Index dimension_;
    std::optional<std::int64_t> budget_;
    std::int64_t eval_count_ = 0;
    std::vector<double> history_;
    double best_value_ = std::numeric_limits<double>::infinity();
};

}  // namespace fdsurr
