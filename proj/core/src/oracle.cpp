#include "fdsurr/oracle.hpp"

#include <utility>

#include "fdsurr/errors.hpp"

namespace fdsurr {

Oracle::Oracle(Objective objective, Eigen::Index dimension, std::optional<std::int64_t> budget)
    : objective_(std::move(objective)), dimension_(dimension), budget_(budget) {
    if (dimension_ < 1) {
        throw NonPositiveInput("oracle dimension must be positive");
    }
    if (budget_ && *budget_ < 1) {
        throw NonPositiveInput("oracle budget must be positive");
    }
}

double Oracle::evaluate(const Vector& x) {
    if (x.size() != dimension_) {
        throw DimensionMismatch(dimension_, x.size());
    }
    if (exhausted()) {
        throw BudgetExhausted();
    }
    const double value = objective_(x);
    ++eval_count_;
    history_.push_back(value);
    if (value < best_value_) {
        best_value_ = value;
    }
    return value;
}

}  // namespace fdsurr
