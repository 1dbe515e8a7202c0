#include "fdsurr/rbf_model.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "fdsurr/errors.hpp"

namespace fdsurr {

double RbfKernel::psi(double r) const {
    switch (kind) {
        case RbfKernelKind::Gaussian: return std::exp(-r * r);
        case RbfKernelKind::Multiquadratic: return -std::sqrt(1.0 + r * r);
        case RbfKernelKind::Cubic: return r * r * r;
    }
    return 0.0;
}

double RbfKernel::psi_over_r(double r) const {
    switch (kind) {
        case RbfKernelKind::Gaussian: return -2.0 * std::exp(-r * r);
        case RbfKernelKind::Multiquadratic: return -1.0 / std::sqrt(1.0 + r * r);
        case RbfKernelKind::Cubic: return 3.0 * r;
    }
    return 0.0;
}

std::string RbfKernel::name() const {
    switch (kind) {
        case RbfKernelKind::Gaussian: return "gaussian";
        case RbfKernelKind::Multiquadratic: return "multiquadratic";
        case RbfKernelKind::Cubic: return "cubic";
    }
    return "unknown";
}

RbfKernel RbfKernel::from_name(std::string_view name) {
    if (name == "gaussian") return {RbfKernelKind::Gaussian};
    if (name == "multiquadratic") return {RbfKernelKind::Multiquadratic};
    if (name == "cubic") return {RbfKernelKind::Cubic};
    throw ConfigError("unknown RBF kernel '" + std::string(name) + "'");
}

RbfSurrogate::RbfSurrogate(RbfKernel kernel, Matrix centers, Vector alpha, Vector beta,
                           double delta)
    : kernel_(kernel),
      centers_(std::move(centers)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      delta_(delta) {
    if (centers_.cols() != alpha_.size()) {
        throw DimensionMismatch(centers_.cols(), alpha_.size());
    }
    if (centers_.cols() > 0 && centers_.rows() != beta_.size()) {
        throw DimensionMismatch(beta_.size(), centers_.rows());
    }
}

double RbfSurrogate::value(const Vector& x) const {
    if (x.size() != beta_.size()) {
        throw DimensionMismatch(beta_.size(), x.size());
    }
    double m = beta_.dot(x) + delta_;
    for (Eigen::Index i = 0; i < centers_.cols(); ++i) {
        m += alpha_[i] * kernel_.psi((x - centers_.col(i)).norm());
    }
    return m;
}

Vector RbfSurrogate::spatial_gradient(const Vector& x) const {
    if (x.size() != beta_.size()) {
        throw DimensionMismatch(beta_.size(), x.size());
    }
    Vector g = beta_;
    for (Eigen::Index i = 0; i < centers_.cols(); ++i) {
        const Vector d = x - centers_.col(i);
        g += alpha_[i] * kernel_.psi_over_r(d.norm()) * d;
    }
    return g;
}

Vector RbfSurrogate::parameters() const {
    Vector theta(alpha_.size() + beta_.size() + 1);
    theta << alpha_, beta_, delta_;
    return theta;
}

ParameterPack RbfSurrogate::pack() const {
    ParameterPack p;
    p.family = "rbf:" + kernel_.name();
    p.shape = {static_cast<long>(alpha_.size()), static_cast<long>(beta_.size())};
    const Vector theta = parameters();
    p.values.assign(theta.data(), theta.data() + theta.size());
    p.values.insert(p.values.end(), centers_.data(), centers_.data() + centers_.size());
    return p;
}

RbfSurrogate RbfSurrogate::unpack(const ParameterPack& pack) {
    const std::string prefix = "rbf:";
    if (pack.family.rfind(prefix, 0) != 0 || pack.shape.size() != 2) {
        throw Error("parameter pack is not an RBF model");
    }
    const long N = pack.shape[0];
    const long n = pack.shape[1];
    if (N < 0 || n < 1 || static_cast<long>(pack.values.size()) != N + n + 1 + N * n) {
        throw Error("RBF parameter pack has inconsistent size");
    }
    const double* v = pack.values.data();
    Vector alpha = Eigen::Map<const Vector>(v, N);
    Vector beta = Eigen::Map<const Vector>(v + N, n);
    const double delta = v[N + n];
    Matrix centers = Eigen::Map<const Matrix>(v + N + n + 1, n, N);
    return {RbfKernel::from_name(pack.family.substr(prefix.size())), std::move(centers),
            std::move(alpha), std::move(beta), delta};
}

Vector solve_min_norm(const Matrix& A, const Vector& b, double rel_tol) {
    if (A.rows() != b.size()) {
        throw DimensionMismatch(A.rows(), b.size());
    }
    if (A.cols() == 0) {
        return Vector(0);
    }
    Eigen::BDCSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& s = svd.singularValues();
    const double cutoff = s.size() > 0 ? rel_tol * s[0] : 0.0;
    Vector coeffs = svd.matrixU().transpose() * b;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        coeffs[i] = s[i] > cutoff ? coeffs[i] / s[i] : 0.0;
    }
    return svd.matrixV() * coeffs;
}

RbfSurrogate fit_rbf(RbfKernel kernel, const ValueDataset& F, const GradDataset& G,
                     bool sobolev) {
    if (F.empty()) {
        throw EmptyValueDataset();
    }
    const auto N = static_cast<Eigen::Index>(F.size());
    const Eigen::Index n = F[0].point.size();
    const bool use_grads = sobolev && !G.empty();
    const auto M = use_grads ? static_cast<Eigen::Index>(G.size()) : Eigen::Index{0};

    Matrix centers(n, N);
    for (Eigen::Index i = 0; i < N; ++i) {
        centers.col(i) = F[static_cast<std::size_t>(i)].point;
    }

    // Unknowns are (alpha, beta, delta).
    const Eigen::Index cols = N + n + 1;
    Matrix A = Matrix::Zero(N + M * n, cols);
    Vector rhs(N + M * n);

    const double wv = 1.0 / std::sqrt(static_cast<double>(N));
    for (Eigen::Index r = 0; r < N; ++r) {
        const Vector& y = centers.col(r);
        for (Eigen::Index i = 0; i < N; ++i) {
            A(r, i) = wv * kernel.psi((y - centers.col(i)).norm());
        }
        A.block(r, N, 1, n) = wv * y.transpose();
        A(r, N + n) = wv;
        rhs[r] = wv * F[static_cast<std::size_t>(r)].value;
    }

    if (use_grads) {
        const double wg = 1.0 / std::sqrt(static_cast<double>(M));
        for (Eigen::Index j = 0; j < M; ++j) {
            const auto& e = G[static_cast<std::size_t>(j)];
            if (e.point.size() != n) {
                throw DimensionMismatch(n, e.point.size());
            }
            const Eigen::Index row0 = N + j * n;
            for (Eigen::Index i = 0; i < N; ++i) {
                const Vector d = e.point - centers.col(i);
                A.block(row0, i, n, 1) = wg * kernel.psi_over_r(d.norm()) * d;
            }
            A.block(row0, N, n, n).diagonal().setConstant(wg);
            rhs.segment(row0, n) = wg * e.grad;
        }
    }

    const Vector theta = solve_min_norm(A, rhs);
    return {kernel, std::move(centers), theta.head(N), theta.segment(N, n), theta[N + n]};
}

}  // namespace fdsurr
