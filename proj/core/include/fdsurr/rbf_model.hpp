#pragma once

#include <string>
#include <string_view>

#include "fdsurr/dataset.hpp"
#include "fdsurr/surrogate.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

enum class RbfKernelKind { Gaussian, Multiquadratic, Cubic };

/// Radial function psi together with r -> psi'(r)/r, continuous at r = 0.
///
///   gaussian        psi = exp(-r^2)       psi'/r = -2 exp(-r^2)
///   multiquadratic  psi = -sqrt(1 + r^2)  psi'/r = -1/sqrt(1 + r^2)
///   cubic           psi = r^3             psi'/r = 3r
struct RbfKernel {
    RbfKernelKind kind = RbfKernelKind::Gaussian;

    [[nodiscard]] double psi(double r) const;
    [[nodiscard]] double psi_over_r(double r) const;
    [[nodiscard]] std::string name() const;

    /// Throws ConfigError for unknown names.
    static RbfKernel from_name(std::string_view name);
};

/// m(x) = sum_i alpha_i psi(||x - y_i||) + beta^T x + delta, with one center
/// per value-dataset abscissa.
class RbfSurrogate final : public SurrogateModel {
public:
    /// `centers` holds one center per column.
    RbfSurrogate(RbfKernel kernel, Matrix centers, Vector alpha, Vector beta, double delta);

    [[nodiscard]] Eigen::Index dimension() const override { return beta_.size(); }
    [[nodiscard]] double value(const Vector& x) const override;
    [[nodiscard]] Vector spatial_gradient(const Vector& x) const override;
    /// (alpha, beta, delta)
    [[nodiscard]] Vector parameters() const override;
    /// Shape {N, n}; values are alpha, beta, delta followed by the centers column by column.
    [[nodiscard]] ParameterPack pack() const override;
    static RbfSurrogate unpack(const ParameterPack& pack);

    [[nodiscard]] const RbfKernel& kernel() const noexcept { return kernel_; }
    [[nodiscard]] const Matrix& centers() const noexcept { return centers_; }
    [[nodiscard]] const Vector& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const Vector& beta() const noexcept { return beta_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

private:
    RbfKernel kernel_;
    Matrix centers_;
    Vector alpha_;
    Vector beta_;
    double delta_;
};

/// Minimal-norm least-squares solution of A x ~ b. Singular values below
/// rel_tol * sigma_max are treated as zero.
Vector solve_min_norm(const Matrix& A, const Vector& b, double rel_tol = 1e-12);

/// Fits (alpha, beta, delta) by minimal-norm linear least squares on the
/// value rows (weighted 1/sqrt(N)) and, when `sobolev`, the gradient rows
/// (weighted 1/sqrt(M)). No weight penalty. Throws EmptyValueDataset.
RbfSurrogate fit_rbf(RbfKernel kernel, const ValueDataset& F, const GradDataset& G, bool sobolev);

}  // namespace fdsurr
