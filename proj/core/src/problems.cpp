#include "fdsurr/problems.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <utility>

#include "fdsurr/errors.hpp"

namespace fdsurr {
namespace {

using Residuals = std::function<Vector(const Vector&)>;

TestProblem least_squares(std::string name, Vector x0, Residuals r, double f_low = 0.0) {
    TestProblem p;
    p.name = std::move(name);
    p.n = static_cast<long>(x0.size());
    p.x0 = std::move(x0);
    p.objective = [r = std::move(r)](const Vector& x) { return r(x).squaredNorm(); };
    p.f_low = f_low;
    return p;
}

Vector filled(long n, const std::function<double(long)>& f) {
    Vector v(n);
    for (long i = 0; i < n; ++i) v[i] = f(i);
    return v;
}

TestProblem rosenbrock(long n) {
    Vector x0 = filled(n, [](long i) { return i % 2 == 0 ? -1.2 : 1.0; });
    auto name = n == 2 ? std::string("rosenbrock_2") : "ext_rosenbrock_" + std::to_string(n);
    return least_squares(std::move(name), std::move(x0), [](const Vector& x) {
        Vector r(x.size());
        for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) {
            r[i] = 10.0 * (x[i + 1] - x[i] * x[i]);
            r[i + 1] = 1.0 - x[i];
        }
        return r;
    });
}

TestProblem extended_powell(long n) {
    Vector x0 = filled(n, [](long i) {
        constexpr double start[4] = {3.0, -1.0, 0.0, 1.0};
        return start[i % 4];
    });
    return least_squares("ext_powell_" + std::to_string(n), std::move(x0), [](const Vector& x) {
        Vector r(x.size());
        const double s5 = std::sqrt(5.0);
        const double s10 = std::sqrt(10.0);
        for (Eigen::Index i = 0; i + 3 < x.size(); i += 4) {
            r[i] = x[i] + 10.0 * x[i + 1];
            r[i + 1] = s5 * (x[i + 2] - x[i + 3]);
            r[i + 2] = (x[i + 1] - 2.0 * x[i + 2]) * (x[i + 1] - 2.0 * x[i + 2]);
            r[i + 3] = s10 * (x[i] - x[i + 3]) * (x[i] - x[i + 3]);
        }
        return r;
    });
}

TestProblem beale() {
    return least_squares("beale_2", Vector::Ones(2), [](const Vector& x) {
        constexpr double y[3] = {1.5, 2.25, 2.625};
        Vector r(3);
        for (int i = 0; i < 3; ++i) {
            r[i] = y[i] - x[0] * (1.0 - std::pow(x[1], i + 1));
        }
        return r;
    });
}

TestProblem freudenstein_roth() {
    Vector x0(2);
    x0 << 0.5, -2.0;
    return least_squares("freudenstein_roth_2", std::move(x0), [](const Vector& x) {
        Vector r(2);
        r[0] = -13.0 + x[0] + ((5.0 - x[1]) * x[1] - 2.0) * x[1];
        r[1] = -29.0 + x[0] + ((x[1] + 1.0) * x[1] - 14.0) * x[1];
        return r;
    });
}

TestProblem helical_valley() {
    Vector x0(3);
    x0 << -1.0, 0.0, 0.0;
    return least_squares("helical_valley_3", std::move(x0), [](const Vector& x) {
        const double theta = std::atan2(x[1], x[0]) / (2.0 * std::numbers::pi);
        Vector r(3);
        r[0] = 10.0 * (x[2] - 10.0 * theta);
        r[1] = 10.0 * (std::hypot(x[0], x[1]) - 1.0);
        r[2] = x[2];
        return r;
    });
}

TestProblem box3d() {
    Vector x0(3);
    x0 << 0.0, 10.0, 20.0;
    return least_squares("box3d_3", std::move(x0), [](const Vector& x) {
        Vector r(10);
        for (int i = 0; i < 10; ++i) {
            const double t = 0.1 * (i + 1);
            r[i] = std::exp(-t * x[0]) - std::exp(-t * x[1]) - x[2] * (std::exp(-t) - std::exp(-10.0 * t));
        }
        return r;
    });
}

TestProblem wood() {
    Vector x0(4);
    x0 << -3.0, -1.0, -3.0, -1.0;
    return least_squares("wood_4", std::move(x0), [](const Vector& x) {
        Vector r(6);
        r[0] = 10.0 * (x[1] - x[0] * x[0]);
        r[1] = 1.0 - x[0];
        r[2] = std::sqrt(90.0) * (x[3] - x[2] * x[2]);
        r[3] = 1.0 - x[2];
        r[4] = std::sqrt(10.0) * (x[1] + x[3] - 2.0);
        r[5] = (x[1] - x[3]) / std::sqrt(10.0);
        return r;
    });
}

TestProblem trigonometric(long n) {
    return least_squares("trigonometric_" + std::to_string(n), Vector::Constant(n, 1.0 / n),
                         [](const Vector& x) {
                             const auto n = x.size();
                             const double cos_sum = x.array().cos().sum();
                             Vector r(n);
                             for (Eigen::Index i = 0; i < n; ++i) {
                                 r[i] = static_cast<double>(n) - cos_sum +
                                        static_cast<double>(i + 1) * (1.0 - std::cos(x[i])) -
                                        std::sin(x[i]);
                             }
                             return r;
                         });
}

TestProblem variably_dimensioned(long n) {
    Vector x0 = filled(n, [n](long i) { return 1.0 - static_cast<double>(i + 1) / n; });
    return least_squares("variably_dimensioned_" + std::to_string(n), std::move(x0),
                         [](const Vector& x) {
                             const auto n = x.size();
                             Vector r(n + 2);
                             double s = 0.0;
                             for (Eigen::Index j = 0; j < n; ++j) {
                                 r[j] = x[j] - 1.0;
                                 s += static_cast<double>(j + 1) * (x[j] - 1.0);
                             }
                             r[n] = s;
                             r[n + 1] = s * s;
                             return r;
                         });
}

TestProblem penalty1(long n) {
    Vector x0 = filled(n, [](long i) { return static_cast<double>(i + 1); });
    return least_squares("penalty1_" + std::to_string(n), std::move(x0), [](const Vector& x) {
        const auto n = x.size();
        Vector r(n + 1);
        const double sa = std::sqrt(1e-5);
        for (Eigen::Index i = 0; i < n; ++i) {
            r[i] = sa * (x[i] - 1.0);
        }
        r[n] = x.squaredNorm() - 0.25;
        return r;
    });
}

TestProblem broyden_tridiagonal(long n) {
    return least_squares("broyden_tridiagonal_" + std::to_string(n), Vector::Constant(n, -1.0),
                         [](const Vector& x) {
                             const auto n = x.size();
                             Vector r(n);
                             for (Eigen::Index i = 0; i < n; ++i) {
                                 const double prev = i > 0 ? x[i - 1] : 0.0;
                                 const double next = i + 1 < n ? x[i + 1] : 0.0;
                                 r[i] = (3.0 - 2.0 * x[i]) * x[i] - prev - 2.0 * next + 1.0;
                             }
                             return r;
                         });
}

TestProblem discrete_boundary_value(long n) {
    const double h = 1.0 / static_cast<double>(n + 1);
    Vector x0 = filled(n, [h](long i) {
        const double t = (i + 1) * h;
        return t * (t - 1.0);
    });
    return least_squares("discrete_boundary_value_" + std::to_string(n), std::move(x0),
                         [h](const Vector& x) {
                             const auto n = x.size();
                             Vector r(n);
                             for (Eigen::Index i = 0; i < n; ++i) {
                                 const double t = static_cast<double>(i + 1) * h;
                                 const double prev = i > 0 ? x[i - 1] : 0.0;
                                 const double next = i + 1 < n ? x[i + 1] : 0.0;
                                 const double c = x[i] + t + 1.0;
                                 r[i] = 2.0 * x[i] - prev - next + 0.5 * h * h * c * c * c;
                             }
                             return r;
                         });
}

TestProblem brown_almost_linear(long n) {
    return least_squares("brown_almost_linear_" + std::to_string(n), Vector::Constant(n, 0.5),
                         [](const Vector& x) {
                             const auto n = x.size();
                             Vector r(n);
                             const double sum = x.sum();
                             for (Eigen::Index i = 0; i + 1 < n; ++i) {
                                 r[i] = x[i] + sum - static_cast<double>(n + 1);
                             }
                             r[n - 1] = x.prod() - 1.0;
                             return r;
                         });
}

TestProblem broyden_banded(long n) {
    return least_squares("broyden_banded_" + std::to_string(n), Vector::Constant(n, -1.0),
                         [](const Vector& x) {
                             const auto n = x.size();
                             Vector r(n);
                             for (Eigen::Index i = 0; i < n; ++i) {
                                 double s = 0.0;
                                 const Eigen::Index lo = std::max<Eigen::Index>(0, i - 5);
                                 const Eigen::Index hi = std::min<Eigen::Index>(n - 1, i + 1);
                                 for (Eigen::Index j = lo; j <= hi; ++j) {
                                     if (j != i) s += x[j] * (1.0 + x[j]);
                                 }
                                 r[i] = x[i] * (2.0 + 5.0 * x[i] * x[i]) + 1.0 - s;
                             }
                             return r;
                         });
}

/// ||J x - c||^2 for the full-rank linear function with m residuals, as a quadratic.
TestProblem linear_full_rank(long n, long m) {
    Matrix J = Matrix::Identity(m, n);
    J.array() -= 2.0 / static_cast<double>(m);
    const Vector c = Vector::Ones(m);
    TestProblem p = make_quadratic("linear_full_rank_" + std::to_string(n), 2.0 * J.transpose() * J,
                                   -2.0 * J.transpose() * c, c.squaredNorm(), Vector::Ones(n));
    return p;
}

}  // namespace

TestProblem make_quadratic(std::string name, const Matrix& A, const Vector& b, double c,
                           Vector x0) {
    if (A.rows() != A.cols() || A.rows() != b.size() || b.size() != x0.size()) {
        throw DimensionMismatch(A.rows(), b.size());
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(A);
    if (eig.eigenvalues().minCoeff() <= 0.0) {
        throw NonPositiveInput("quadratic test problem needs a positive definite Hessian");
    }
    TestProblem p;
    p.name = std::move(name);
    p.n = static_cast<long>(b.size());
    p.x0 = std::move(x0);
    p.objective = [A, b, c](const Vector& x) { return 0.5 * x.dot(A * x) + b.dot(x) + c; };
    p.gradient = [A, b](const Vector& x) -> Vector { return A * x + b; };
    p.lipschitz = eig.eigenvalues().maxCoeff();
    const Vector x_star = -A.ldlt().solve(b);
    p.f_low = 0.5 * x_star.dot(A * x_star) + b.dot(x_star) + c;
    return p;
}

TestProblem make_diagonal_quadratic(long n, double cond) {
    Vector d(n);
    for (long i = 0; i < n; ++i) {
        d[i] = n > 1 ? std::pow(cond, static_cast<double>(i) / static_cast<double>(n - 1)) : cond;
    }
    // 1/2 sum d_i (x_i - 1)^2 = 1/2 x^T D x - d^T x + 1/2 sum d_i
    const std::string cond_tag = std::to_string(static_cast<long>(std::lround(cond)));
    return make_quadratic("quad_diag_" + std::to_string(n) + "_c" + cond_tag,
                          Matrix(d.asDiagonal()), -d, 0.5 * d.sum(), Vector::Zero(n));
}

TestProblem make_rotated_quadratic(long n, double cond, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix R(n, n);
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) R(i, j) = dist(rng);
    }
    const Matrix Q = Eigen::HouseholderQR<Matrix>(R).householderQ();
    Vector d(n);
    for (long i = 0; i < n; ++i) {
        d[i] = n > 1 ? std::pow(cond, static_cast<double>(i) / static_cast<double>(n - 1)) : cond;
    }
    Matrix A = Q * d.asDiagonal() * Q.transpose();
    A = 0.5 * (A + A.transpose()).eval();
    const Vector center = Vector::LinSpaced(n, -1.0, 1.0);
    // 1/2 (x - c)^T A (x - c)
    const std::string cond_tag = std::to_string(static_cast<long>(std::lround(cond)));
    return make_quadratic("quad_rotated_" + std::to_string(n) + "_c" + cond_tag, A, -A * center,
                          0.5 * center.dot(A * center), Vector::Constant(n, 2.0));
}

std::vector<TestProblem> standard_suite() {
    std::vector<TestProblem> s;
    {
        Matrix A(1, 1);
        A << 4.0;
        Vector b(1);
        b << -12.0;
        s.push_back(make_quadratic("quadratic_1", A, b, 18.0, Vector::Zero(1)));
    }
    s.push_back(make_quadratic("sphere_2", 2.0 * Matrix::Identity(2, 2), Vector::Zero(2), 0.0,
                               Vector::Constant(2, 10.0)));
    s.push_back(make_diagonal_quadratic(3, 10.0));
    s.push_back(make_diagonal_quadratic(5, 100.0));
    s.push_back(make_diagonal_quadratic(8, 1000.0));
    s.push_back(make_diagonal_quadratic(12, 100.0));
    s.push_back(make_diagonal_quadratic(20, 10.0));
    s.push_back(make_rotated_quadratic(4, 50.0, 7));
    s.push_back(make_rotated_quadratic(6, 20.0, 11));
    s.push_back(linear_full_rank(5, 10));
    s.push_back(rosenbrock(2));
    s.push_back(rosenbrock(4));
    s.push_back(rosenbrock(10));
    s.push_back(extended_powell(4));
    s.push_back(extended_powell(8));
    s.push_back(beale());
    s.push_back(freudenstein_roth());
    s.push_back(helical_valley());
    s.push_back(box3d());
    s.push_back(wood());
    s.push_back(trigonometric(5));
    s.push_back(trigonometric(10));
    s.push_back(variably_dimensioned(6));
    s.push_back(penalty1(4));
    s.push_back(broyden_tridiagonal(8));
    s.push_back(discrete_boundary_value(6));
    s.push_back(brown_almost_linear(10));
    s.push_back(broyden_banded(10));
    return s;
}

std::optional<TestProblem> find_problem(std::string_view name) {
    for (auto& p : standard_suite()) {
        if (p.name == name) return std::move(p);
    }
    return std::nullopt;
}

}  // namespace fdsurr
