#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgeo/errors.hpp"
#include "mgeo/slant.hpp"
#include "random_immersions.hpp"

namespace mgeo {
namespace {

SlantData slant_of(const testing::Fixture& f) { return f.bundle.slant; }

TEST(Slant, InvariantPlane) {
  const SlantData s = slant_of(testing::fixture_at(testing::example("flat-invariant-plane"), {0, 0}));
  EXPECT_NEAR(s.theta1, 0.0, 1e-7);
  EXPECT_EQ(s.d1, 2);
  EXPECT_EQ(s.d2, 0);
  EXPECT_TRUE(s.bislant());
  // empty D2 takes the angle of D1
  EXPECT_DOUBLE_EQ(s.theta2, s.theta1);
}

TEST(Slant, MixedPlaneHasCosSquaredOneSixth) {
  const auto f = testing::fixture_at(testing::example("mixed-slant-plane"), {0.3, -0.4});
  const SlantData s = f.bundle.slant;
  EXPECT_NEAR(std::cos(s.theta1) * std::cos(s.theta1), 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(s.theta1 * 180.0 / std::numbers::pi, 65.905, 1e-3);
  EXPECT_TRUE(s.slant1());
  EXPECT_LT(s.lemma_residual_1, 1e-10);
  // (P T)^2 X = 0.25 X on the frame
  EXPECT_LT(max_abs(f.bundle.T * f.bundle.T - 0.25 * Matrix::Identity(2, 2)), 1e-12);
}

TEST(Slant, AntiInvariantLine) {
  // v = cos t e1 + sin t e2 with sigma cos^2 t + (p - sigma) sin^2 t = 0.
  const MetallicParams m = metallic_constants(1, 1);
  const double t = std::atan(std::sqrt(m.sigma / (m.sigma - m.p)));
  char buf[200];
  std::snprintf(buf, sizeof buf, "%.17g*u1", std::cos(t));
  const std::string x = buf;
  std::snprintf(buf, sizeof buf, "%.17g*u1", std::sin(t));
  const std::string y = buf;
  const auto f = testing::fixture_at(testing::make_case(testing::flat_space(1, 1), 1, {x, y}), {0.2});
  EXPECT_LT(f.bundle.T.norm(), 1e-9);
  EXPECT_NEAR(f.bundle.slant.theta1, std::numbers::pi / 2, 1e-7);
}

TEST(Slant, TorusDistributions) {
  const auto f = testing::fixture_at(testing::example("torus-in-flat"), {0.5, 1.5});
  const SlantData& s = f.bundle.slant;
  EXPECT_EQ(s.d1, 1);
  EXPECT_EQ(s.d2, 1);
  EXPECT_NEAR(s.theta1, 0.0, 1e-7);
  EXPECT_NEAR(s.theta2, 0.0, 1e-7);
  const MetallicParams m = metallic_constants(1, 1);
  EXPECT_NEAR(s.tr_TP1, m.sigma, 1e-12);
  EXPECT_NEAR(s.tr_TP2, m.p - m.sigma, 1e-12);
  EXPECT_NEAR(s.tr_T, s.tr_TP1 + s.tr_TP2, 1e-12);
  EXPECT_LT(s.projector_residual, 1e-10);
  EXPECT_NEAR(s.vartheta(1, m), m.p * m.sigma + m.q, 1e-12);
}

TEST(Slant, DistributionErrors) {
  const auto f = testing::fixture_at(testing::example("torus-in-flat"), {0.5, 1.5});
  const PhiDecomposition phi = phi_decompose(f.compiled.spec, f.pd);
  const MetallicParams& m = f.compiled.spec.space.params();
  Matrix a(2, 1), b(2, 1);
  a << 1, 0;
  b << 1, 1;
  EXPECT_THROW(slant_analysis(phi, m, a, b), ArgumentError);
  Matrix zero = Matrix::Zero(2, 1);
  EXPECT_THROW(slant_analysis(phi, m, zero, std::nullopt), ClassificationError);
  // D1 alone: D2 is its orthogonal complement
  const SlantData s = slant_analysis(phi, m, a, std::nullopt);
  EXPECT_EQ(s.d2, 1);
}

TEST(Slant, RandomImmersionsHaveTheirConstructedAngles) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 64; ++trial) {
    const auto kind = static_cast<testing::SlantKind>(trial % 4);
    const int n = kind == testing::SlantKind::bislant ? 2 + trial % 3 : 1 + trial % 4;
    const auto ri = testing::random_immersion(kind, static_cast<testing::AmbientKind>(trial / 4 % 4),
                                              n, rng);
    const auto f = testing::fixture_at(ri.config, std::vector<double>(n, 0.0));
    const SlantData& s = f.bundle.slant;
    SCOPED_TRACE(ri.config.name);
    EXPECT_TRUE(s.bislant());
    EXPECT_EQ(s.d1, ri.d1);
    EXPECT_EQ(s.d2, ri.d2);
    if (kind != testing::SlantKind::invariant) {
      EXPECT_NEAR(s.theta1, ri.expected_theta1, 1e-7);
      EXPECT_NEAR(s.theta2, ri.expected_theta2, 1e-7);
    } else {
      // invariant: each tangent vector lies in one factor, so |T X| = |phi X|
      EXPECT_NEAR(s.theta1, 0.0, 1e-7);
    }
    EXPECT_LT(s.lemma_residual_1, 1e-7);
    EXPECT_LT(s.lemma_residual_2, 1e-7);
    EXPECT_LT(s.theta_residual, 1e-7);
    EXPECT_LT(s.projector_residual, 1e-10);
    EXPECT_NEAR(s.tr_T, s.tr_TP1 + s.tr_TP2, 1e-9);
  }
}

}  // namespace
}  // namespace mgeo
