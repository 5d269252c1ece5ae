#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "mgeo/frame_optimizer.hpp"
#include "random_immersions.hpp"

namespace mgeo {
namespace {

FrameObjective rayleigh(const Matrix& A) {
  FrameObjective obj;
  obj.n = static_cast<int>(A.rows());
  obj.value = [A](const Matrix& Q) { return Q.col(0).dot(A * Q.col(0)); };
  for (int i = 0; i < obj.n; ++i)
    for (int j = i + 1; j < obj.n; ++j) obj.planes.emplace_back(i, j);
  return obj;
}

TEST(TrigPoly, ArgminMatchesDenseGrid) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> N;
  for (int t = 0; t < 200; ++t) {
    const double c[5] = {N(rng), N(rng), N(rng), N(rng), N(rng)};
    const auto g = [&](double s) {
      return c[0] + c[1] * std::cos(s) + c[2] * std::sin(s) + c[3] * std::cos(2 * s) +
             c[4] * std::sin(2 * s);
    };
    double best = g(0.0);
    for (int k = 1; k < 200000; ++k) best = std::min(best, g(2 * std::numbers::pi * k / 200000));
    EXPECT_LE(g(trig_poly_argmin(c[0], c[1], c[2], c[3], c[4])), best + 1e-9);
  }
}

TEST(FrameOptimizer, RayleighQuotientExtremes) {
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 5; ++n) {
    const Matrix A = testing::random_symmetric(n, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> es(A);
    const OptimizerOptions opt;
    const OptimumCertificate lo = minimize_frames(rayleigh(A), opt);
    const OptimumCertificate hi = maximize_frames(rayleigh(A), opt);
    EXPECT_NEAR(lo.value, es.eigenvalues()(0), 1e-10);
    EXPECT_NEAR(hi.value, es.eigenvalues()(n - 1), 1e-10);
    EXPECT_EQ(lo.starts, 64);
    EXPECT_GT(lo.agreeing, 0);
    EXPECT_LT(max_abs(lo.frame.transpose() * lo.frame - Matrix::Identity(n, n)), 1e-12);
  }
}

TEST(FrameOptimizer, DescendNeverIncreases) {
  std::mt19937_64 rng(10);
  const Matrix A = testing::random_symmetric(4, rng);
  const FrameObjective obj = rayleigh(A);
  Matrix Q = random_orthogonal(4, 1, 0);
  const double before = obj.value(Q);
  const double after = descend(obj, Q, 200);
  EXPECT_LE(after, before);
  EXPECT_NEAR(after, obj.value(Q), 1e-14);
}

TEST(FrameOptimizer, Deterministic) {
  std::mt19937_64 rng(14);
  const Matrix A = testing::random_symmetric(4, rng);
  OptimizerOptions one;
  OptimizerOptions many;
  many.threads = 4;
  const OptimumCertificate a = minimize_frames(rayleigh(A), one);
  const OptimumCertificate b = minimize_frames(rayleigh(A), one);
  const OptimumCertificate c = minimize_frames(rayleigh(A), many);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.agreeing, c.agreeing);
  EXPECT_TRUE(a.frame == c.frame);
  // restart i does not depend on the number of restarts
  EXPECT_TRUE(random_orthogonal(4, 42, 3) == random_orthogonal(4, 42, 3));
  EXPECT_FALSE(random_orthogonal(4, 42, 3) == random_orthogonal(4, 42, 4));
}

TEST(FrameOptimizer, SeedsCountAsStarts) {
  std::mt19937_64 rng(15);
  FrameObjective obj = rayleigh(testing::random_symmetric(3, rng));
  obj.seeds.push_back(Matrix::Identity(3, 3));
  OptimizerOptions opt;
  opt.restarts = 5;
  EXPECT_EQ(minimize_frames(obj, opt).starts, 6);
}

}  // namespace
}  // namespace mgeo
