#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgeo/equality.hpp"
#include "mgeo/invariants.hpp"
#include "mgeo/oracles.hpp"
#include "random_immersions.hpp"

namespace mgeo {
namespace {

Matrix m2(double a, double b, double c, double d) {
  Matrix M(2, 2);
  M << a, b, c, d;
  return M;
}

TEST(EqualityPatterns, ZeroShapeOperatorsMatchEverything) {
  const std::vector<Matrix> zero = {Matrix::Zero(3, 3), Matrix::Zero(3, 3)};
  const PointGeometry g = make_geometry(Tensor4(5), zero);
  EXPECT_EQ(wintgen_pattern(zero).residual, 0.0);
  EXPECT_EQ(casorati_pattern(zero, 1.0).residual, 0.0);
  EXPECT_EQ(umbilical_pattern(zero).residual, 0.0);
  EXPECT_EQ(chen_pattern(zero, Vector::Zero(2), Matrix::Identity(3, 3), {2}).residual, 0.0);
  EXPECT_EQ(shape_ricci_pattern(zero, Vector::Zero(2), omega_k(g, 2)).residual, 0.0);
}

TEST(EqualityPatterns, CasoratiDiagonalForm) {
  for (double a : {0.3, -1.2, 2.0}) {
    // n = 2, u = 1: eigenvalues a and (n^2 - n) a / u = 2a
    const EqualityPattern p = casorati_pattern({m2(a, 0, 0, 2 * a), Matrix::Zero(2, 2)}, 1.0);
    EXPECT_NEAR(p.residual, 0.0, 1e-12);
    EXPECT_NEAR(std::abs(p.param("a")), std::abs(a), 1e-12);
  }
  // an umbilical point is not of that form
  EXPECT_GT(casorati_pattern({Matrix::Identity(2, 2)}, 1.0).residual, 0.1);
}

TEST(EqualityPatterns, WintgenPair) {
  const std::vector<Matrix> A = {m2(0, 1, 1, 0), m2(1, 0, 0, -1)};
  const EqualityPattern p = wintgen_pattern(A);
  EXPECT_NEAR(p.residual, 0.0, 1e-12);
  EXPECT_NEAR(p.param("beta"), 1.0, 1e-12);
  EXPECT_NEAR(ddvv_component_check(A).slack, 0.0, 1e-12);
  // with alpha1, alpha2 and an umbilical third direction
  const std::vector<Matrix> B = {m2(0.5, 2, 2, 0.5), m2(-1 + 2, 0, 0, -1 - 2), 0.7 * Matrix::Identity(2, 2)};
  EXPECT_NEAR(wintgen_pattern(B).residual, 0.0, 1e-12);
  // a generic pair is not
  std::mt19937_64 rng(3);
  EXPECT_GT(wintgen_pattern({testing::random_symmetric(3, rng), testing::random_symmetric(3, rng)}).residual,
            1e-3);
}

TEST(EqualityPatterns, UmbilicalResidual) {
  EXPECT_NEAR(umbilical_pattern({3.0 * Matrix::Identity(3, 3)}).residual, 0.0, 1e-15);
  EXPECT_NEAR(umbilical_pattern({m2(1, 0, 0, -1)}).residual, std::sqrt(2.0), 1e-15);
}

TEST(EqualityPatterns, ChenBlockStructure) {
  // tuple (2) at n = 3: block {e1, e2} with trace nu, h33 = nu, off-block zero
  Matrix A = Matrix::Zero(3, 3);
  A(0, 0) = 0.4;
  A(1, 1) = 0.6;
  A(2, 2) = 1.0;
  A(0, 1) = A(1, 0) = 0.2;
  Vector H(1);
  H << A.trace() / 3.0;
  const EqualityPattern p = chen_pattern({A}, H, Matrix::Identity(3, 3), {2});
  EXPECT_NEAR(p.residual, 0.0, 1e-12);
  A(0, 2) = A(2, 0) = 0.3;
  EXPECT_GT(chen_pattern({A}, H, Matrix::Identity(3, 3), {2}).residual, 0.1);
}

// Whenever a verifier reports equality, its pattern residual is small.
TEST(EqualityPatterns, EqualityImpliesPattern) {
  for (const char* name : {"flat-invariant-plane", "flat-invariant-3space", "mixed-slant-plane",
                           "sphere-in-flat", "torus-in-flat"}) {
    const CaseConfig& cfg = testing::example(name);
    for (const auto& u : grid_points(cfg)) {
      const PointResult r = run_point(compile_case(cfg), u, 0, {true, false});
      for (const InequalityResult& res : r.results)
        if (res.equality) EXPECT_LE(res.equality_case.residual, 1e-6) << name << " " << to_string(res.theorem);
    }
  }
}

}  // namespace
}  // namespace mgeo
