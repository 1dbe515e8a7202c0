#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdsurr/dataset.hpp"
#include "fdsurr/types.hpp"

namespace fdsurr {

/// Flat parameter array plus the shape needed to rebuild a model.
struct ParameterPack {
    std::string family;          ///< e.g. "nn:softplus", "rbf:gaussian"
    std::vector<long> shape;
    std::vector<double> values;

    friend bool operator==(const ParameterPack&, const ParameterPack&) = default;
};

/// Text form: three lines `family <name>`, `shape <dims...>`, `values <v...>`.
void write_pack(std::ostream& out, const ParameterPack& pack);
/// Throws Error on malformed input.
ParameterPack read_pack(std::istream& in);

/// A trainable, continuously differentiable model m: R^n -> R.
///
/// `spatial_gradient` is the exact derivative of `value`. Trained models are
/// never mutated afterwards, so concurrent queries are safe.
class SurrogateModel {
public:
    virtual ~SurrogateModel() = default;

    [[nodiscard]] virtual Eigen::Index dimension() const = 0;
    [[nodiscard]] virtual double value(const Vector& x) const = 0;
    [[nodiscard]] virtual Vector spatial_gradient(const Vector& x) const = 0;
    /// Trainable parameters theta, concatenated; ||theta||^2 enters the loss.
    [[nodiscard]] virtual Vector parameters() const = 0;
    [[nodiscard]] virtual ParameterPack pack() const = 0;
};

/// Data of one training call. With `sobolev == false` the gradient set is ignored.
struct TrainingProblem {
    const ValueDataset& values;
    const GradDataset& grads;
    double lambda = 0.0;
    bool sobolev = true;
};

/// (1/N) sum (m(y_i) - f_i)^2 + [sobolev] (1/M) sum ||grad m(z_j) - g_j||^2 + lambda ||theta||^2.
/// An empty gradient set contributes zero. Throws EmptyValueDataset.
double loss(const SurrogateModel& model, const TrainingProblem& problem);

}  // namespace fdsurr
