#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdsurr/complexity.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

/// A smooth, bounded-below objective with its standard starting point.
struct TestProblem {
    std::string name;
    long n = 0;
    Objective objective;
    Vector x0;
    std::optional<double> f_low;      ///< known lower bound (the minimum for quadratics)
    std::optional<double> lipschitz;  ///< gradient Lipschitz constant, when global
    GradientFn gradient;              ///< analytic gradient, quadratics only
};

/// f(x) = 1/2 x^T A x + b^T x + c with A symmetric positive definite.
TestProblem make_quadratic(std::string name, const Matrix& A, const Vector& b, double c,
                           Vector x0);

/// Diagonal quadratic 1/2 sum d_i (x_i - 1)^2 with d log-spaced in [1, cond], x0 = 0.
TestProblem make_diagonal_quadratic(long n, double cond);

/// Rotated quadratic with eigenvalues log-spaced in [1, cond]; the rotation
/// comes from a fixed-seed orthogonalization so the problem is reproducible.
TestProblem make_rotated_quadratic(long n, double cond, unsigned seed);

/// The internal benchmark suite (28 problems, n from 1 to 20).
std::vector<TestProblem> standard_suite();

/// Looks up a suite problem by name.
std::optional<TestProblem> find_problem(std::string_view name);

}  // namespace fdsurr
