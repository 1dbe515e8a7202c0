#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <Eigen/QR>

#include "fdsurr/surrogate.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr::testing {

using ScalarFn = std::function<double(const Vector&)>;

/// Central-difference gradient with step scale * max(1, ||x||).
inline Vector central_gradient(const ScalarFn& f, const Vector& x, double scale = 1e-6) {
    const double h = scale * std::max(1.0, x.norm());
    Vector g(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        Vector xp = x;
        Vector xm = x;
        xp(j) += h;
        xm(j) -= h;
        g(j) = (f(xp) - f(xm)) / (2.0 * h);
    }
    return g;
}

inline double relative_error(const Vector& got, const Vector& want) {
    const double denom = std::max({got.norm(), want.norm(), 1e-300});
    return (got - want).norm() / denom;
}

inline Vector random_vector(std::mt19937_64& rng, Eigen::Index n, double lo = -1.0,
                            double hi = 1.0) {
    std::uniform_real_distribution<double> U(lo, hi);
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = U(rng);
    return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, Eigen::Index r, Eigen::Index c,
                            double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> U(lo, hi);
    Matrix M(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) M(i, j) = U(rng);
    return M;
}

/// Symmetric positive definite matrix with eigenvalues in [lo, hi].
inline Matrix random_spd(std::mt19937_64& rng, Eigen::Index n, double lo = 0.5, double hi = 2.0) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, n));
    const Matrix Q = qr.householderQ();
    const Vector d = random_vector(rng, n, lo, hi);
    return Q * d.asDiagonal() * Q.transpose();
}

/// m(x) = 1/2 x^T A x + b^T x + c.
class QuadraticModel final : public SurrogateModel {
public:
    QuadraticModel(Matrix A, Vector b, double c) : A_(std::move(A)), b_(std::move(b)), c_(c) {}

    [[nodiscard]] Eigen::Index dimension() const override { return b_.size(); }
    [[nodiscard]] double value(const Vector& x) const override {
        return 0.5 * x.dot(A_ * x) + b_.dot(x) + c_;
    }
    [[nodiscard]] Vector spatial_gradient(const Vector& x) const override { return A_ * x + b_; }
    [[nodiscard]] Vector parameters() const override { return Vector(0); }
    [[nodiscard]] ParameterPack pack() const override { return {"quadratic", {}, {}}; }

    [[nodiscard]] const Matrix& A() const { return A_; }

private:
    Matrix A_;
    Vector b_;
    double c_;
};

}  // namespace fdsurr::testing
