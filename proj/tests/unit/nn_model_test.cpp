#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fdsurr/errors.hpp"
#include "fdsurr/nn_model.hpp"
#include "fdsurr/oracle.hpp"
#include "test_support.hpp"

using namespace fdsurr;
using fdsurr::testing::central_gradient;
using fdsurr::testing::random_matrix;
using fdsurr::testing::random_vector;
using fdsurr::testing::relative_error;

namespace {

const Activation kActs[] = {{ActivationKind::Softplus}, {ActivationKind::Sigmoid},
                            {ActivationKind::Silu}};

NnSurrogate random_net(std::mt19937_64& rng, long n, long q, Activation act) {
    return {act, random_matrix(rng, q, n), random_vector(rng, q), random_vector(rng, q),
            random_vector(rng, 1)(0)};
}

struct Data {
    ValueDataset F{64};
    GradDataset G{16};
};

Data make_data(std::mt19937_64& rng, long n, int N, int M) {
    Data d;
    for (int i = 0; i < N; ++i) {
        const Vector y = random_vector(rng, n, -2.0, 2.0);
        d.F.insert(y, std::sin(y.sum()) + y.squaredNorm());
    }
    for (int j = 0; j < M; ++j) {
        d.G.insert(random_vector(rng, n, -2.0, 2.0), random_vector(rng, n), 1e-3);
    }
    return d;
}

// Data sampled from the network itself: every residual vanishes.
Data self_data(std::mt19937_64& rng, const NnSurrogate& m, int N, int M) {
    Data d;
    const long n = m.dimension();
    for (int i = 0; i < N; ++i) {
        const Vector y = random_vector(rng, n);
        d.F.insert(y, m.value(y));
    }
    for (int j = 0; j < M; ++j) {
        const Vector z = random_vector(rng, n);
        d.G.insert(z, m.spatial_gradient(z), 1e-3);
    }
    return d;
}

}  // namespace

TEST(Activation, DerivativesMatchDifferences) {
    for (const auto& a : kActs) {
        for (double u : {-4.0, -1.0, -0.1, 0.0, 0.3, 2.0, 5.0}) {
            const double h = 1e-6;
            EXPECT_NEAR(a.dphi(u), (a.phi(u + h) - a.phi(u - h)) / (2 * h), 1e-8) << a.name();
            EXPECT_NEAR(a.d2phi(u), (a.dphi(u + h) - a.dphi(u - h)) / (2 * h), 1e-8) << a.name();
        }
    }
}

TEST(Activation, StableForLargeArguments) {
    for (const auto& a : kActs) {
        for (double u : {-1e3, 1e3}) {
            EXPECT_TRUE(std::isfinite(a.phi(u))) << a.name();
            EXPECT_TRUE(std::isfinite(a.dphi(u))) << a.name();
            EXPECT_TRUE(std::isfinite(a.d2phi(u))) << a.name();
        }
        EXPECT_EQ(Activation::from_name(a.name()).kind, a.kind);
    }
    EXPECT_NEAR(Activation{ActivationKind::Softplus}.phi(1e3), 1e3, 1e-9);
    EXPECT_THROW(Activation::from_name("relu"), ConfigError);
}

TEST(NnModel, ZeroWeightsGiveConstant) {
    for (const auto& a : kActs) {
        const NnSurrogate m(a, Matrix::Zero(6, 3), Vector::Zero(6), Vector::Zero(6), 1.5);
        std::mt19937_64 rng(1);
        const Vector x = random_vector(rng, 3, -5.0, 5.0);
        EXPECT_EQ(m.value(x), 1.5);
        EXPECT_EQ(m.spatial_gradient(x).norm(), 0.0);
    }
}

TEST(NnModel, SoftplusUnitNet) {
    const NnSurrogate m(Activation{}, Matrix::Ones(1, 1), Vector::Zero(1), Vector::Ones(1), 0.0);
    const Vector x = Vector::Zero(1);
    EXPECT_DOUBLE_EQ(m.value(x), std::log(2.0));
    EXPECT_DOUBLE_EQ(m.spatial_gradient(x)(0), 0.5);
}

TEST(NnModel, SpatialGradientMatchesCentralDifferences) {
    std::mt19937_64 rng(41);
    for (const auto& a : kActs) {
        for (int p = 0; p < 20; ++p) {
            const long n = 1 + p % 4;
            const auto m = random_net(rng, n, 5 * n, a);
            const Vector x = random_vector(rng, n, -2.0, 2.0);
            const Vector fd = central_gradient([&](const Vector& y) { return m.value(y); }, x);
            EXPECT_LE(relative_error(m.spatial_gradient(x), fd), 1e-6) << a.name() << " " << p;
        }
    }
}

TEST(NnModel, ParameterLayout) {
    std::mt19937_64 rng(2);
    auto m = random_net(rng, 2, 3, Activation{});
    const Vector theta = m.parameters();
    ASSERT_EQ(theta.size(), 3 * 2 + 3 + 3 + 1);
    EXPECT_EQ(theta(1), m.W1()(1, 0));
    EXPECT_EQ(theta(3), m.W1()(0, 1));
    EXPECT_EQ(theta(6), m.b1()(0));
    EXPECT_EQ(theta(9), m.W2()(0));
    EXPECT_EQ(theta(12), m.b2());
    m.set_parameters(theta * 2.0);
    EXPECT_EQ(m.parameters(), theta * 2.0);
}

TEST(NnLoss, AgreesWithGenericLoss) {
    std::mt19937_64 rng(43);
    for (const auto& a : kActs) {
        const auto m = random_net(rng, 3, 15, a);
        const auto d = make_data(rng, 3, 8, 4);
        for (bool sob : {false, true}) {
            const TrainingProblem prob{d.F, d.G, 1e-2, sob};
            const double want = loss(m, prob);
            EXPECT_NEAR(nn_loss(m, prob), want, 1e-12 * (1.0 + want));
        }
    }
}

TEST(NnLoss, ThetaGradientMatchesCentralDifferences) {
    std::mt19937_64 rng(47);
    for (const auto& a : kActs) {
        for (int inst = 0; inst < 10; ++inst) {
            const long n = 1 + inst % 3;
            const auto m = random_net(rng, n, 5 * n, a);
            const auto d = make_data(rng, n, 6 + inst, 3);
            for (bool sob : {false, true}) {
                const TrainingProblem prob{d.F, d.G, 1e-3, sob};
                const Vector theta = m.parameters();
                NnSurrogate work = m;
                const Vector fd = central_gradient(
                    [&](const Vector& t) {
                        work.set_parameters(t);
                        return nn_loss(work, prob);
                    },
                    theta);
                EXPECT_LE(relative_error(loss_gradient_theta(m, prob), fd), 1e-5)
                    << a.name() << " inst " << inst << " sobolev " << sob;
            }
        }
    }
}

TEST(NnLoss, PerfectFitHasZeroGradient) {
    for (const auto& a : kActs) {
        const NnSurrogate m(a, Matrix::Zero(5, 1), Vector::Zero(5), Vector::Zero(5), 2.0);
        ValueDataset F(8);
        GradDataset G(8);
        for (double y : {-1.0, 0.0, 1.0}) F.insert(Vector::Constant(1, y), 2.0);
        G.insert(Vector::Constant(1, 0.5), Vector::Zero(1), 1e-3);
        EXPECT_EQ(loss_gradient_theta(m, {F, G, 0.0, true}).norm(), 0.0);
    }
}

TEST(NnLoss, PenaltyOnlyGradient) {
    std::mt19937_64 rng(53);
    for (const auto& a : kActs) {
        const auto m = random_net(rng, 2, 10, a);
        const auto d = self_data(rng, m, 6, 3);
        const double lambda = 0.3;
        const Vector g = loss_gradient_theta(m, {d.F, d.G, lambda, true});
        const Vector want = 2.0 * lambda * m.parameters();
        EXPECT_LE((g - want).norm(), 1e-12 * want.norm()) << a.name();
    }
}

TEST(NnLoss, EmptyThrows) {
    ValueDataset F(2);
    GradDataset G(2);
    EXPECT_THROW(loss_gradient_theta(init_nn(1, Activation{}, 1), {F, G, 0.0, true}),
                 EmptyValueDataset);
}

TEST(InitNn, ShapeBiasesAndDeterminism) {
    for (const auto& a : kActs) {
        const auto m = init_nn(2, a, 99);
        EXPECT_EQ(m.W1().rows(), 10);
        EXPECT_EQ(m.W1().cols(), 2);
        EXPECT_EQ(m.b1().norm(), 0.0);
        EXPECT_EQ(m.b2(), 0.0);
        EXPECT_EQ(init_nn(2, a, 99).parameters(), m.parameters());
        EXPECT_NE(init_nn(2, a, 100).parameters(), m.parameters());
    }
}

TEST(InitNn, HeStandardDeviation) {
    const long n = 2;
    double sum = 0.0;
    double sq = 0.0;
    long count = 0;
    for (std::uint64_t seed = 0; count < 10000; ++seed) {
        const auto m = init_nn(n, Activation{}, seed);
        for (Eigen::Index i = 0; i < m.W1().size(); ++i) {
            const double w = m.W1().data()[i];
            sum += w;
            sq += w * w;
            ++count;
        }
    }
    const double mean = sum / count;
    const double sd = std::sqrt(sq / count - mean * mean);
    const double want = std::sqrt(2.0 / n);
    EXPECT_LE(std::abs(sd - want), 0.1 * want);
}

TEST(InitNn, GlorotBoundForSigmoid) {
    const long n = 3;
    const double bound = std::sqrt(6.0 / (n + 5 * n));
    const auto m = init_nn(n, Activation{ActivationKind::Sigmoid}, 5);
    EXPECT_LE(m.W1().cwiseAbs().maxCoeff(), bound);
}

// The default stopping rule is relative to the initial gradient, and the
// constant-fit minimizers form a flat valley, so the default run stops early;
// a tighter tolerance drives the loss to zero.
TEST(TrainNn, FitsConstantData) {
    const long n = 2;
    ValueDataset F(30);
    GradDataset G(10);
    std::mt19937_64 rng(59);
    for (int i = 0; i < 12; ++i) F.insert(random_vector(rng, n), 3.0);
    for (int j = 0; j < 4; ++j) G.insert(random_vector(rng, n), Vector::Zero(n), 1e-3);
    LbfgsConfig tight;
    tight.grad_tol_rel = 1e-10;
    for (const auto& a : kActs) {
        const TrainingProblem prob{F, G, 0.0, true};
        const auto d = train_nn(init_nn(n, a, 1), prob);
        EXPECT_EQ(d.stop, LbfgsStop::GradientTolerance) << a.name();
        EXPECT_LE(d.final_loss, 1e-5 * d.initial_loss) << a.name();

        const auto r = train_nn(init_nn(n, a, 1), prob, tight);
        EXPECT_LE(r.final_loss, 1e-8) << a.name();
        EXPECT_LE(nn_loss(r.model, prob), 1e-8) << a.name();
    }
}

TEST(TrainNn, OptimalInitReturnsImmediately) {
    const NnSurrogate m(Activation{}, Matrix::Zero(5, 1), Vector::Zero(5), Vector::Zero(5), 2.0);
    ValueDataset F(8);
    GradDataset G(8);
    F.insert(Vector::Zero(1), 2.0);
    const auto r = train_nn(m, {F, G, 0.0, true});
    EXPECT_EQ(r.iterations, 0);
    EXPECT_EQ(r.stop, LbfgsStop::GradientTolerance);
    EXPECT_EQ(r.model.parameters(), m.parameters());
}

TEST(TrainNn, LossNeverIncreasesAndOracleUntouched) {
    std::mt19937_64 rng(61);
    Oracle o([](const Vector& x) { return std::exp(0.3 * x.sum()) + x.squaredNorm(); }, 3);
    ValueDataset F(40);
    GradDataset G(10);
    for (int i = 0; i < 15; ++i) {
        const Vector y = random_vector(rng, 3);
        F.insert(y, o.evaluate(y));
    }
    for (int j = 0; j < 5; ++j) G.insert(random_vector(rng, 3), random_vector(rng, 3), 1e-3);
    const auto before = o.eval_count();
    for (const auto& a : kActs) {
        const auto init = init_nn(3, a, 7);
        const TrainingProblem prob{F, G, 1e-4, true};
        const auto r = train_nn(init, prob);
        EXPECT_LE(r.final_loss, nn_loss(init, prob));
        ASSERT_FALSE(r.loss_history.empty());
        for (std::size_t i = 1; i < r.loss_history.size(); ++i) {
            EXPECT_LE(r.loss_history[i], r.loss_history[i - 1]) << a.name() << " at " << i;
        }
    }
    EXPECT_EQ(o.eval_count(), before);
}
