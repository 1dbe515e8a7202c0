#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fdsurr {

/// Convergence test: f_x0 - f_x >= (1 - tau) (f_x0 - f_best).
bool converged(double f_x0, double f_x, double f_best, double tau);

/// Evaluations each solver needed to pass the convergence test, per problem.
struct ProfileTable {
    std::vector<std::string> problems;
    std::vector<long> dims;
    std::vector<std::string> solvers;
    /// evals[p][s]; empty when solver s never converged on problem p
    std::vector<std::vector<std::optional<std::int64_t>>> evals;
    std::vector<double> f_best;  ///< per problem, over all solvers
};

/// Builds the table from the value histories histories[p][s] (oracle call
/// order, first entry f(x0)). f_best is the lowest value any solver evaluated.
ProfileTable build_profile_table(std::vector<std::string> problems, std::vector<long> dims,
                                 std::vector<std::string> solvers,
                                 const std::vector<std::vector<std::vector<double>>>& histories,
                                 double tau);

/// Appends the solvers of `other`; throws MismatchedProblemSets unless both
/// tables cover the same problems in the same order.
ProfileTable merge_tables(const ProfileTable& a, const ProfileTable& b);

/// Stepwise data-profile curve, exact at its breakpoints.
struct ProfileCurve {
    std::string solver;
    std::vector<std::pair<double, double>> points;  ///< (alpha, fraction), alpha ascending

    /// Fraction of problems solved within alpha simplex gradients.
    [[nodiscard]] double at(double alpha) const;
    [[nodiscard]] double final_fraction() const { return points.empty() ? 0.0 : points.back().second; }
};

/// One curve per solver over alpha in [0, budget_simplex]; a problem counts
/// as solved at alpha when evals <= alpha (n + 1). Throws
/// MismatchedProblemSets when the table rows are inconsistent.
std::vector<ProfileCurve> data_profile(const ProfileTable& table, double budget_simplex);

/// Box-plot statistics; quartiles by linear interpolation, whiskers at the
/// most extreme data within 1.5 IQR of the box.
struct BoxSummary {
    std::size_t count = 0;
    double min = 0.0;
    double whisker_low = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double whisker_high = 0.0;
    double max = 0.0;
};

BoxSummary box_summary(std::vector<double> values);

double quantile(std::vector<double> values, double p);

}  // namespace fdsurr
