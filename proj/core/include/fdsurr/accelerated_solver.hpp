#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdsurr/base_solver.hpp"
#include "fdsurr/config.hpp"
#include "fdsurr/dataset.hpp"
#include "fdsurr/lbfgs.hpp"
#include "fdsurr/nn_model.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/rbf_model.hpp"
#include "fdsurr/surrogate.hpp"

namespace fdsurr {

/// Produces a surrogate from the current datasets, once per outer iteration.
class SurrogateTrainer {
public:
    virtual ~SurrogateTrainer() = default;

    /// Returns nullptr when training broke down; the caller then skips the
    /// surrogate phase for that iteration.
    virtual std::shared_ptr<const SurrogateModel> train(const ValueDataset& F,
                                                        const GradDataset& G) = 0;
    [[nodiscard]] virtual std::string name() const = 0;
};

/// Refits an RBF model from scratch on every call.
class RbfTrainer final : public SurrogateTrainer {
public:
    RbfTrainer(RbfKernel kernel, bool sobolev) : kernel_(kernel), sobolev_(sobolev) {}

    std::shared_ptr<const SurrogateModel> train(const ValueDataset& F,
                                                const GradDataset& G) override;
    [[nodiscard]] std::string name() const override;

private:
    RbfKernel kernel_;
    bool sobolev_;
};

/// Trains the shallow network, warm-starting each call from the previous result.
class NnTrainer final : public SurrogateTrainer {
public:
    NnTrainer(long n, Activation activation, bool sobolev, double lambda, std::uint64_t seed,
              LbfgsConfig lbfgs = {});

    std::shared_ptr<const SurrogateModel> train(const ValueDataset& F,
                                                const GradDataset& G) override;
    [[nodiscard]] std::string name() const override;

    /// (input, output) parameters of each successful training call, when
    /// recording is enabled.
    void record_warm_starts(bool on) { record_ = on; }
    [[nodiscard]] const std::vector<std::pair<Vector, Vector>>& warm_start_log() const {
        return log_;
    }
    [[nodiscard]] const NnSurrogate& current() const { return current_; }

private:
    NnSurrogate current_;
    bool sobolev_;
    double lambda_;
    LbfgsConfig lbfgs_;
    bool record_ = false;
    std::vector<std::pair<Vector, Vector>> log_;
};

struct SurrogateFamily {
    enum class Kind { Rbf, Nn };
    Kind kind = Kind::Rbf;
    RbfKernel kernel{};
    Activation activation{};

    static SurrogateFamily rbf(RbfKernel k) { return {Kind::Rbf, k, {}}; }
    static SurrogateFamily nn(Activation a) { return {Kind::Nn, {}, a}; }
};

std::unique_ptr<SurrogateTrainer> make_trainer(const SurrogateFamily& family, bool sobolev, long n,
                                               double lambda, std::uint64_t seed);

/// Base method plus dataset collection and surrogate descent after every
/// successful outer step. The value set starts as {(x0, f(x0))}; the
/// surrogate points are merged once the surrogate phase ends.
SolverResult solve_accelerated(Oracle& oracle, const Vector& x0, const SolverConfig& cfg,
                               SurrogateTrainer& trainer);

SolverResult solve_accelerated(Oracle& oracle, const Vector& x0, const SolverConfig& cfg,
                               const SurrogateFamily& family, bool sobolev, std::uint64_t seed);

/// Mean number of successful surrogate steps per completed outer iteration.
/// Throws EmptyTrace.
double average_surrogate_steps(const SolverTrace& trace);

/// (1 + S / (2 (n + 1))) / (1 + S).
double surrogate_gain_of(double S, long n);

/// surrogate_gain_of(average_surrogate_steps(trace), n). Throws EmptyTrace.
double surrogate_gain(const SolverTrace& trace, long n);

}  // namespace fdsurr
