#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fdsurr/lbfgs.hpp"
#include "fdsurr/surrogate.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

enum class ActivationKind { Softplus, Sigmoid, Silu };

/// Entrywise activation with its first two derivatives.
///
/// Sigmoid is the increasing logistic 1/(1 + e^{-u}) and SiLU is u/(1 + e^{-u}).
/// The mirrored forms 1/(1 + e^{u}) and u/(1 + e^{u}) span the same model
/// class after flipping the sign of the first-layer weights.
struct Activation {
    ActivationKind kind = ActivationKind::Softplus;

    [[nodiscard]] double phi(double u) const;
    [[nodiscard]] double dphi(double u) const;
    [[nodiscard]] double d2phi(double u) const;
    [[nodiscard]] std::string name() const;

    /// Throws ConfigError for unknown names.
    static Activation from_name(std::string_view name);
};

/// Numerically stable logistic function.
double logistic(double u);

/// One-hidden-layer network m(x) = W2 phi(W1 x + b1) + b2.
class NnSurrogate final : public SurrogateModel {
public:
    NnSurrogate(Activation activation, Matrix W1, Vector b1, Vector w2, double b2);

    [[nodiscard]] Eigen::Index dimension() const override { return W1_.cols(); }
    [[nodiscard]] Eigen::Index hidden_width() const { return W1_.rows(); }
    [[nodiscard]] double value(const Vector& x) const override;
    [[nodiscard]] Vector spatial_gradient(const Vector& x) const override;
    /// W1 (column-major), b1, W2, b2.
    [[nodiscard]] Vector parameters() const override;
    void set_parameters(const Vector& theta);
    /// Shape {q, n}.
    [[nodiscard]] ParameterPack pack() const override;
    static NnSurrogate unpack(const ParameterPack& pack);

    [[nodiscard]] const Activation& activation() const noexcept { return activation_; }
    [[nodiscard]] const Matrix& W1() const noexcept { return W1_; }
    [[nodiscard]] const Vector& b1() const noexcept { return b1_; }
    [[nodiscard]] const Vector& W2() const noexcept { return w2_; }
    [[nodiscard]] double b2() const noexcept { return b2_; }

private:
    Activation activation_;
    Matrix W1_;
    Vector b1_;
    Vector w2_;
    double b2_;
};

/// Width q = 5n. He-normal weights for softplus and SiLU, Glorot-uniform for
/// sigmoid, zero biases. Deterministic in `seed`.
NnSurrogate init_nn(long n, Activation activation, std::uint64_t seed);

/// Batched training loss; same value as `loss()` but without per-point virtual calls.
double nn_loss(const NnSurrogate& model, const TrainingProblem& problem);

/// Exact gradient of the training loss with respect to `parameters()`.
/// Throws EmptyValueDataset.
Vector loss_gradient_theta(const NnSurrogate& model, const TrainingProblem& problem);

struct NnTrainResult {
    NnSurrogate model;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    int iterations = 0;
    LbfgsStop stop = LbfgsStop::MaxIterations;
    std::vector<double> loss_history;
};

/// Minimizes the training loss from `init` with L-BFGS. Never touches the
/// objective oracle; a line-search failure returns the best iterate found.
NnTrainResult train_nn(const NnSurrogate& init, const TrainingProblem& problem,
                       const LbfgsConfig& cfg = {});

}  // namespace fdsurr
