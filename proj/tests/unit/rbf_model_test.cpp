#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fdsurr/errors.hpp"
#include "fdsurr/finite_difference.hpp"
#include "fdsurr/oracle.hpp"
#include "fdsurr/rbf_model.hpp"
#include "test_support.hpp"

using namespace fdsurr;
using fdsurr::testing::central_gradient;
using fdsurr::testing::QuadraticModel;
using fdsurr::testing::random_matrix;
using fdsurr::testing::random_spd;
using fdsurr::testing::random_vector;
using fdsurr::testing::relative_error;

namespace {

const RbfKernel kKernels[] = {{RbfKernelKind::Gaussian}, {RbfKernelKind::Multiquadratic},
                              {RbfKernelKind::Cubic}};

Vector vec(std::initializer_list<double> v) {
    Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out(i++) = x;
    return out;
}

}  // namespace

TEST(RbfKernel, ValuesAndNames) {
    EXPECT_EQ(RbfKernel{RbfKernelKind::Gaussian}.psi(0.0), 1.0);
    EXPECT_EQ(RbfKernel{RbfKernelKind::Multiquadratic}.psi(0.0), -1.0);
    EXPECT_EQ(RbfKernel{RbfKernelKind::Cubic}.psi(2.0), 8.0);
    for (const auto& k : kKernels) {
        EXPECT_EQ(RbfKernel::from_name(k.name()).kind, k.kind);
        EXPECT_TRUE(std::isfinite(k.psi_over_r(0.0)));
    }
    EXPECT_THROW(RbfKernel::from_name("thin-plate"), ConfigError);
}

TEST(RbfKernel, PsiOverRMatchesDerivative) {
    for (const auto& k : kKernels) {
        for (double r : {0.1, 0.7, 1.5, 3.0}) {
            const double h = 1e-6;
            const double d = (k.psi(r + h) - k.psi(r - h)) / (2 * h);
            EXPECT_NEAR(k.psi_over_r(r) * r, d, 1e-7 * std::max(1.0, std::abs(d))) << k.name();
        }
    }
}

TEST(RbfValue, LinearTailOnly) {
    const RbfSurrogate m(RbfKernel{}, Matrix(2, 0), Vector(0), vec({1, 0}), 2.0);
    EXPECT_EQ(m.value(vec({3, 5})), 5.0);
}

TEST(RbfValue, GaussianAtCenter) {
    const RbfSurrogate m(RbfKernel{}, vec({0.3, -0.2}), vec({1}), Vector::Zero(2), 0.0);
    EXPECT_EQ(m.value(vec({0.3, -0.2})), 1.0);
}

TEST(RbfValue, CubicAtDistanceTwo) {
    const RbfSurrogate m(RbfKernel{RbfKernelKind::Cubic}, vec({0, 0}), vec({1}),
                         Vector::Zero(2), 0.0);
    EXPECT_DOUBLE_EQ(m.value(vec({0, 2})), 8.0);
}

TEST(RbfGradient, CenterContributesNothingAtItself) {
    Matrix C(1, 2);
    C << 0.0, 1.0;
    const RbfSurrogate m(RbfKernel{}, C, vec({1.0, 0.0}), vec({0.5}), 0.0);
    EXPECT_EQ(m.spatial_gradient(vec({0.0}))(0), 0.5);
}

TEST(RbfGradient, ZeroAlphaGivesBeta) {
    std::mt19937_64 rng(3);
    const Vector beta = random_vector(rng, 3);
    const RbfSurrogate m(RbfKernel{RbfKernelKind::Cubic}, random_matrix(rng, 3, 4),
                         Vector::Zero(4), beta, 1.0);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ((m.spatial_gradient(random_vector(rng, 3)) - beta).norm(), 0.0);
    }
}

TEST(RbfGradient, MatchesCentralDifferences) {
    std::mt19937_64 rng(17);
    for (const auto& k : kKernels) {
        for (int p = 0; p < 20; ++p) {
            const long n = 1 + p % 5;
            const long N = 1 + p % 7;
            const RbfSurrogate m(k, random_matrix(rng, n, N), random_vector(rng, N),
                                 random_vector(rng, n), random_vector(rng, 1)(0));
            const Vector x = random_vector(rng, n, -2.0, 2.0);
            const Vector fd = central_gradient([&](const Vector& y) { return m.value(y); }, x);
            EXPECT_LE(relative_error(m.spatial_gradient(x), fd), 1e-6) << k.name() << " " << p;
        }
    }
}

TEST(FitRbf, SinglePointMinimalNorm) {
    ValueDataset F(4);
    GradDataset G(4);
    F.insert(vec({0}), 5.0);
    const auto m = fit_rbf(RbfKernel{}, F, G, false);
    EXPECT_NEAR(m.alpha()(0), 2.5, 1e-12);
    EXPECT_NEAR(m.beta()(0), 0.0, 1e-12);
    EXPECT_NEAR(m.delta(), 2.5, 1e-12);
    EXPECT_NEAR(m.value(vec({0})), 5.0, 1e-12);
}

TEST(FitRbf, EmptyThrows) {
    ValueDataset F(4);
    GradDataset G(4);
    EXPECT_THROW(fit_rbf(RbfKernel{}, F, G, true), EmptyValueDataset);
}

TEST(FitRbf, ReproducesLinearData) {
    std::mt19937_64 rng(23);
    for (const auto& k : kKernels) {
        for (long n : {1, 2, 4}) {
            const Vector a = random_vector(rng, n);
            const double c = 0.7;
            ValueDataset F(100);
            GradDataset G(10);
            for (long i = 0; i < n + 2; ++i) {
                const Vector y = random_vector(rng, n);
                F.insert(y, a.dot(y) + c);
            }
            const auto m = fit_rbf(k, F, G, false);
            for (const auto& e : F.entries()) {
                EXPECT_LE(std::abs(m.value(e.point) - e.value), 1e-8) << k.name();
            }
        }
    }
}

TEST(FitRbf, SobolevRecoversLinearGradient) {
    std::mt19937_64 rng(29);
    for (const auto& k : kKernels) {
        const long n = 3;
        const Vector a = random_vector(rng, n);
        ValueDataset F(100);
        GradDataset G(10);
        for (int i = 0; i < 6; ++i) {
            const Vector y = random_vector(rng, n);
            F.insert(y, a.dot(y) - 1.0);
        }
        for (int j = 0; j < 3; ++j) G.insert(random_vector(rng, n), a, 1e-3);
        const auto m = fit_rbf(k, F, G, true);
        for (const auto& e : F.entries()) {
            EXPECT_LE(std::abs(m.value(e.point) - e.value), 1e-8) << k.name();
        }
        for (const auto& e : G.entries()) {
            EXPECT_LE((m.spatial_gradient(e.point) - a).norm(), 1e-8) << k.name();
        }
        EXPECT_LE(loss(m, {F, G, 0.0, true}), 1e-12 * (1.0 + a.norm()));
    }
}

TEST(FitRbf, BitwiseDeterministic) {
    std::mt19937_64 rng(31);
    ValueDataset F(50);
    GradDataset G(10);
    for (int i = 0; i < 12; ++i) {
        const Vector y = random_vector(rng, 3);
        F.insert(y, std::cos(y.sum()));
    }
    for (int j = 0; j < 4; ++j) G.insert(random_vector(rng, 3), random_vector(rng, 3), 1e-3);
    for (const auto& k : kKernels) {
        const auto a = fit_rbf(k, F, G, true);
        const auto b = fit_rbf(k, F, G, true);
        EXPECT_EQ(a.parameters(), b.parameters());
    }
}

TEST(SolveMinNorm, PicksSmallestSolution) {
    Matrix A(1, 2);
    A << 1.0, 1.0;
    const Vector x = solve_min_norm(A, vec({2.0}));
    EXPECT_NEAR(x(0), 1.0, 1e-14);
    EXPECT_NEAR(x(1), 1.0, 1e-14);
}

// A quadratic model interpolating f at z and z + h e_l has
// ||g_h(z) - grad m(z)||^2 = h^2/4 sum A_ll^2.
TEST(QuadraticInterpolation, DifferenceErrorIdentity) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const long n = 1 + trial % 6;
        const QuadraticModel m(random_spd(rng, n, 0.5, 2.0), random_vector(rng, n, -0.1, 0.1), 0.0);
        const Vector z = random_vector(rng, n, -0.1, 0.1);
        for (double h : {1e-1, 1e-2, 1e-3}) {
            Oracle o([&](const Vector& x) { return m.value(x); }, n);
            const auto fd = forward_gradient(o, z, m.value(z), h);
            const double lhs = (fd.grad - m.spatial_gradient(z)).squaredNorm();
            const double rhs = h * h / 4.0 * m.A().diagonal().squaredNorm();
            EXPECT_LE(std::abs(lhs - rhs), 1e-10 * rhs) << "trial " << trial << " h=" << h;
        }
    }
}
