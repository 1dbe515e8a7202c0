#include "fdsurr/nn_model.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "fdsurr/errors.hpp"

namespace fdsurr {

double logistic(double u) {
    if (u >= 0.0) {
        return 1.0 / (1.0 + std::exp(-u));
    }
    const double e = std::exp(u);
    return e / (1.0 + e);
}

double Activation::phi(double u) const {
    switch (kind) {
        case ActivationKind::Softplus: return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u)));
        case ActivationKind::Sigmoid: return logistic(u);
        case ActivationKind::Silu: return u * logistic(u);
    }
    return 0.0;
}

double Activation::dphi(double u) const {
    const double s = logistic(u);
    switch (kind) {
        case ActivationKind::Softplus: return s;
        case ActivationKind::Sigmoid: return s * (1.0 - s);
        case ActivationKind::Silu: return s + u * s * (1.0 - s);
    }
    return 0.0;
}

double Activation::d2phi(double u) const {
    const double s = logistic(u);
    const double ds = s * (1.0 - s);
    switch (kind) {
        case ActivationKind::Softplus: return ds;
        case ActivationKind::Sigmoid: return ds * (1.0 - 2.0 * s);
        case ActivationKind::Silu: return ds * (2.0 + u * (1.0 - 2.0 * s));
    }
    return 0.0;
}

std::string Activation::name() const {
    switch (kind) {
        case ActivationKind::Softplus: return "softplus";
        case ActivationKind::Sigmoid: return "sigmoid";
        case ActivationKind::Silu: return "silu";
    }
    return "unknown";
}

Activation Activation::from_name(std::string_view name) {
    if (name == "softplus") return {ActivationKind::Softplus};
    if (name == "sigmoid") return {ActivationKind::Sigmoid};
    if (name == "silu") return {ActivationKind::Silu};
    throw ConfigError("unknown activation '" + std::string(name) + "'");
}

NnSurrogate::NnSurrogate(Activation activation, Matrix W1, Vector b1, Vector w2, double b2)
    : activation_(activation), W1_(std::move(W1)), b1_(std::move(b1)), w2_(std::move(w2)), b2_(b2) {
    if (b1_.size() != W1_.rows()) {
        throw DimensionMismatch(W1_.rows(), b1_.size());
    }
    if (w2_.size() != W1_.rows()) {
        throw DimensionMismatch(W1_.rows(), w2_.size());
    }
}

double NnSurrogate::value(const Vector& x) const {
    if (x.size() != W1_.cols()) {
        throw DimensionMismatch(W1_.cols(), x.size());
    }
    const Vector u = W1_ * x + b1_;
    double m = b2_;
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        m += w2_[i] * activation_.phi(u[i]);
    }
    return m;
}

Vector NnSurrogate::spatial_gradient(const Vector& x) const {
    if (x.size() != W1_.cols()) {
        throw DimensionMismatch(W1_.cols(), x.size());
    }
    Vector d = W1_ * x + b1_;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        d[i] = activation_.dphi(d[i]) * w2_[i];
    }
    return W1_.transpose() * d;
}

Vector NnSurrogate::parameters() const {
    const Eigen::Index q = W1_.rows();
    const Eigen::Index n = W1_.cols();
    Vector theta(q * n + 2 * q + 1);
    theta.head(q * n) = Eigen::Map<const Vector>(W1_.data(), q * n);
    theta.segment(q * n, q) = b1_;
    theta.segment(q * n + q, q) = w2_;
    theta[q * n + 2 * q] = b2_;
    return theta;
}

void NnSurrogate::set_parameters(const Vector& theta) {
    const Eigen::Index q = W1_.rows();
    const Eigen::Index n = W1_.cols();
    if (theta.size() != q * n + 2 * q + 1) {
        throw DimensionMismatch(q * n + 2 * q + 1, theta.size());
    }
    W1_ = Eigen::Map<const Matrix>(theta.data(), q, n);
    b1_ = theta.segment(q * n, q);
    w2_ = theta.segment(q * n + q, q);
    b2_ = theta[q * n + 2 * q];
}

ParameterPack NnSurrogate::pack() const {
    ParameterPack p;
    p.family = "nn:" + activation_.name();
    p.shape = {static_cast<long>(W1_.rows()), static_cast<long>(W1_.cols())};
    const Vector theta = parameters();
    p.values.assign(theta.data(), theta.data() + theta.size());
    return p;
}

NnSurrogate NnSurrogate::unpack(const ParameterPack& pack) {
    const std::string prefix = "nn:";
    if (pack.family.rfind(prefix, 0) != 0 || pack.shape.size() != 2) {
        throw Error("parameter pack is not an NN model");
    }
    const long q = pack.shape[0];
    const long n = pack.shape[1];
    if (q < 1 || n < 1 || static_cast<long>(pack.values.size()) != q * n + 2 * q + 1) {
        throw Error("NN parameter pack has inconsistent size");
    }
    NnSurrogate model(Activation::from_name(pack.family.substr(prefix.size())),
                      Matrix::Zero(q, n), Vector::Zero(q), Vector::Zero(q), 0.0);
    model.set_parameters(Eigen::Map<const Vector>(pack.values.data(), q * n + 2 * q + 1));
    return model;
}

NnSurrogate init_nn(long n, Activation activation, std::uint64_t seed) {
    if (n < 1) {
        throw NonPositiveInput("network input dimension must be positive");
    }
    const long q = 5 * n;
    std::mt19937_64 rng(seed);
    Matrix W1(q, n);
    Vector w2(q);
    auto fill = [&](double* data, long count, long fan_in, long fan_out) {
        if (activation.kind == ActivationKind::Sigmoid) {
            const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
            std::uniform_real_distribution<double> dist(-a, a);
            for (long i = 0; i < count; ++i) data[i] = dist(rng);
        } else {
            std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(fan_in)));
            for (long i = 0; i < count; ++i) data[i] = dist(rng);
        }
    };
    fill(W1.data(), q * n, n, q);
    fill(w2.data(), q, q, 1);
    return {activation, std::move(W1), Vector::Zero(q), std::move(w2), 0.0};
}

namespace {

struct Batch {
    Matrix Y;  // n x N
    Vector f;  // N
    Matrix Z;  // n x M
    Matrix G;  // n x M
};

Batch make_batch(const NnSurrogate& model, const TrainingProblem& problem) {
    if (problem.values.empty()) {
        throw EmptyValueDataset();
    }
    const Eigen::Index n = model.dimension();
    Batch b;
    const auto N = static_cast<Eigen::Index>(problem.values.size());
    b.Y.resize(n, N);
    b.f.resize(N);
    for (Eigen::Index i = 0; i < N; ++i) {
        const auto& e = problem.values[static_cast<std::size_t>(i)];
        if (e.point.size() != n) {
            throw DimensionMismatch(n, e.point.size());
        }
        b.Y.col(i) = e.point;
        b.f[i] = e.value;
    }
    const auto M = problem.sobolev ? static_cast<Eigen::Index>(problem.grads.size()) : 0;
    b.Z.resize(n, M);
    b.G.resize(n, M);
    for (Eigen::Index j = 0; j < M; ++j) {
        const auto& e = problem.grads[static_cast<std::size_t>(j)];
        if (e.point.size() != n) {
            throw DimensionMismatch(n, e.point.size());
        }
        b.Z.col(j) = e.point;
        b.G.col(j) = e.grad;
    }
    return b;
}

/// Loss and, when `grad` is non-null, its theta-gradient in `parameters()` order.
double evaluate_loss(const NnSurrogate& model, const Batch& b, double lambda, Vector* grad) {
    const Activation act = model.activation();
    const Matrix& W1 = model.W1();
    const Vector& w2 = model.W2();
    const Eigen::Index q = W1.rows();
    const Eigen::Index n = W1.cols();
    const auto N = b.Y.cols();
    const auto M = b.Z.cols();

    Matrix gW1;
    Vector gb1;
    Vector gw2;
    double gb2 = 0.0;
    if (grad != nullptr) {
        gW1 = Matrix::Zero(q, n);
        gb1 = Vector::Zero(q);
        gw2 = Vector::Zero(q);
    }

    // Value residuals.
    Matrix U = W1 * b.Y;
    U.colwise() += model.b1();
    const Matrix A = U.unaryExpr([&](double u) { return act.phi(u); });
    const Vector e = (A.transpose() * w2).array() + model.b2() - b.f.array();
    double total = e.squaredNorm() / static_cast<double>(N);
    if (grad != nullptr) {
        const double c = 2.0 / static_cast<double>(N);
        gw2 += c * (A * e);
        gb2 += c * e.sum();
        Matrix delta = U.unaryExpr([&](double u) { return act.dphi(u); });
        delta.array().colwise() *= w2.array();
        delta.array().rowwise() *= (c * e).transpose().array();
        gW1 += delta * b.Y.transpose();
        gb1 += delta.rowwise().sum();
    }

    // Spatial-gradient residuals.
    if (M > 0) {
        Matrix Uz = W1 * b.Z;
        Uz.colwise() += model.b1();
        const Matrix P1 = Uz.unaryExpr([&](double u) { return act.dphi(u); });
        Matrix D = P1;
        D.array().colwise() *= w2.array();
        const Matrix R = W1.transpose() * D - b.G;
        total += R.squaredNorm() / static_cast<double>(M);
        if (grad != nullptr) {
            const double c = 2.0 / static_cast<double>(M);
            const Matrix Wr = W1 * R;
            Matrix S = Uz.unaryExpr([&](double u) { return act.d2phi(u); });
            S.array() *= Wr.array();
            S.array().colwise() *= w2.array();
            gW1 += c * (D * R.transpose() + S * b.Z.transpose());
            gb1 += c * S.rowwise().sum();
            gw2 += c * (P1.array() * Wr.array()).matrix().rowwise().sum();
        }
    }

    const Vector theta = model.parameters();
    total += lambda * theta.squaredNorm();
    if (grad != nullptr) {
        grad->resize(theta.size());
        grad->head(q * n) = Eigen::Map<const Vector>(gW1.data(), q * n);
        grad->segment(q * n, q) = gb1;
        grad->segment(q * n + q, q) = gw2;
        (*grad)[q * n + 2 * q] = gb2;
        *grad += 2.0 * lambda * theta;
    }
    return total;
}

}  // namespace

double nn_loss(const NnSurrogate& model, const TrainingProblem& problem) {
    return evaluate_loss(model, make_batch(model, problem), problem.lambda, nullptr);
}

Vector loss_gradient_theta(const NnSurrogate& model, const TrainingProblem& problem) {
    Vector grad;
    evaluate_loss(model, make_batch(model, problem), problem.lambda, &grad);
    return grad;
}

NnTrainResult train_nn(const NnSurrogate& init, const TrainingProblem& problem,
                       const LbfgsConfig& cfg) {
    const Batch batch = make_batch(init, problem);
    NnSurrogate work = init;
    auto fg = [&](const Vector& theta, Vector& grad) {
        work.set_parameters(theta);
        return evaluate_loss(work, batch, problem.lambda, &grad);
    };
    LbfgsResult r = minimize_lbfgs(fg, init.parameters(), cfg);
    NnSurrogate trained = init;
    trained.set_parameters(r.x);
    NnTrainResult out{std::move(trained), r.f_history.front(), r.f, r.iterations, r.stop,
                      std::move(r.f_history)};
    return out;
}

}  // namespace fdsurr
