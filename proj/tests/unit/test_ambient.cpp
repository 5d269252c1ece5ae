#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fd_oracles.hpp"
#include "fixtures.hpp"
#include "mgeo/ambient.hpp"
#include "mgeo/errors.hpp"

namespace mgeo {
namespace {

using testing::flat_space;

SpaceSpec sphere_space(int m1, double c1, int m2, double c2, int p, int q, Branch br) {
  SpaceSpec s;
  s.m1 = m1;
  s.m2 = m2;
  s.c1 = c1;
  s.c2 = c2;
  s.p = p;
  s.q = q;
  s.branch = br;
  if (c1 > 0) s.factor1 = FactorRealization::sphere(1.0 / std::sqrt(c1));
  if (c2 > 0) s.factor2 = FactorRealization::sphere(1.0 / std::sqrt(c2));
  return s;
}

Vector random_point(const ProductSpaceForm& S, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Vector x(S.embedding_dim());
  for (int i = 0; i < x.size(); ++i) x(i) = N(rng);
  for (int f = 0; f < 2; ++f)
    if (S.factor(f).kind == FactorKind::sphere) {
      auto blk = x.segment(S.offset(f), S.block_size(f));
      blk *= S.factor(f).radius / blk.norm();
    }
  return x;
}

AmbientTangent random_tangent(const ProductSpaceForm& S, const AmbientPoint& x,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  Vector v(S.embedding_dim());
  for (int i = 0; i < v.size(); ++i) v(i) = N(rng);
  return project_to_manifold_tangent(S, x, v);
}

TEST(ProductSpace, Realization) {
  const ProductSpaceForm S = make_space(sphere_space(2, 4.0, 3, 0.0, 1, 1, Branch::first));
  EXPECT_EQ(S.dim(), 5);
  EXPECT_EQ(S.embedding_dim(), 6);
  EXPECT_EQ(S.offset(1), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(S.f_diag()(i), 1.0);
  for (int i = 3; i < 6; ++i) EXPECT_EQ(S.f_diag()(i), -1.0);
  EXPECT_NEAR(S.phi_diag()(0), S.params().sigma, 1e-15);
  EXPECT_NEAR(S.phi_diag()(5), 1.0 - S.params().sigma, 1e-15);
}

TEST(ProductSpace, RejectsInconsistentFactors) {
  SpaceSpec bad_radius = sphere_space(2, 1.0, 1, 0.0, 1, 1, Branch::first);
  bad_radius.factor1.radius = 2.0;
  EXPECT_THROW(make_space(bad_radius), RealizationError);
  SpaceSpec curved_flat = flat_space(2, 1);
  curved_flat.c1 = 1.0;
  EXPECT_THROW(make_space(curved_flat), RealizationError);
  SpaceSpec negative = sphere_space(2, 1.0, 1, 0.0, 1, 1, Branch::first);
  negative.c1 = -1.0;
  EXPECT_THROW(make_space(negative), RealizationError);
  EXPECT_THROW(make_space(flat_space(0, 1)), RealizationError);
  EXPECT_THROW(make_space(flat_space(1, 1, 0, 1)), DomainError);
}

TEST(ProductSpace, PointAndTangentChecks) {
  const ProductSpaceForm S = make_space(sphere_space(2, 1.0, 1, 0.0, 1, 1, Branch::first));
  Vector x(4);
  x << 0, 0, 1, 5;
  const AmbientPoint p = make_point(S, x);
  Vector off = x;
  off(2) = 1.1;
  EXPECT_THROW(make_point(S, off), OffManifoldError);
  EXPECT_NEAR(off_manifold_residual(S, off), 0.1, 1e-12);
  Vector radial(4);
  radial << 0, 0, 1, 0;
  EXPECT_THROW(make_tangent(S, p, radial), ArgumentError);
  EXPECT_NEAR(project_to_manifold_tangent(S, p, radial).vec.norm(), 0.0, 1e-15);
}

// Metallic closed form against the locally product form and a test-side
// product form on several spaces, both branches.
TEST(AmbientCurvature, ClosedFormsAgree) {
  std::mt19937_64 rng(11);
  const SpaceSpec specs[] = {
      sphere_space(2, 1.0, 2, 4.0, 1, 1, Branch::first),
      sphere_space(3, 0.25, 2, 0.0, 2, 1, Branch::first),
      sphere_space(2, 0.0, 3, 1.0, 1, 3, Branch::second),
      sphere_space(2, 4.0, 2, 1.0, 3, 2, Branch::second),
      sphere_space(1, 0.0, 2, 0.0, 1, 1, Branch::first),
      sphere_space(3, 1.0, 3, 1.0, 2, 2, Branch::second),
  };
  for (const SpaceSpec& spec : specs) {
    const ProductSpaceForm S = make_space(spec);
    EXPECT_LT(S.matched_deviation(), 1e-12);
    for (int t = 0; t < 50; ++t) {
      const AmbientPoint x = make_point(S, random_point(S, rng));
      const AmbientTangent X = random_tangent(S, x, rng), Y = random_tangent(S, x, rng),
                           Z = random_tangent(S, x, rng), W = random_tangent(S, x, rng);
      const double prod = ambient_curvature_product(S, X, Y, Z).vec.dot(W.vec);
      const double met = ambient_curvature_metallic(S, X, Y, Z, S.matched_sign()).vec.dot(W.vec);
      const double oracle = testing::product_curvature(S, X.vec, Y.vec, Z.vec, W.vec);
      EXPECT_NEAR(prod, oracle, 1e-10);
      EXPECT_NEAR(met, oracle, 1e-10);
    }
  }
}

TEST(AmbientCurvature, MatchedSignFollowsBranch) {
  const ProductSpaceForm a = make_space(sphere_space(2, 1.0, 2, 4.0, 1, 1, Branch::first));
  const ProductSpaceForm b = make_space(sphere_space(2, 1.0, 2, 4.0, 1, 1, Branch::second));
  EXPECT_EQ(a.matched_sign(), Sign::plus);
  EXPECT_EQ(b.matched_sign(), Sign::minus);
  EXPECT_GT(a.opposite_deviation(), 1e-3);
  EXPECT_TRUE(a.curv_sign_matched());
  SpaceSpec forced = sphere_space(2, 1.0, 2, 4.0, 1, 1, Branch::first);
  forced.curv_sign = Sign::minus;
  EXPECT_FALSE(make_space(forced).curv_sign_matched());
}

TEST(AmbientCurvature, TensorSymmetries) {
  std::mt19937_64 rng(3);
  const ProductSpaceForm S = make_space(sphere_space(2, 1.0, 2, 4.0, 2, 1, Branch::first));
  const AmbientPoint x = make_point(S, random_point(S, rng));
  Matrix frame(S.embedding_dim(), 4);
  for (int j = 0; j < 4; ++j) frame.col(j) = random_tangent(S, x, rng).vec;
  const Tensor4 R = ambient_tensor(S, frame);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          EXPECT_NEAR(R(a, b, c, d), -R(b, a, c, d), 1e-12);
          EXPECT_NEAR(R(a, b, c, d), R(c, d, a, b), 1e-12);
          EXPECT_NEAR(R(a, b, c, d) + R(b, c, a, d) + R(c, a, b, d), 0.0, 1e-12);
        }
}

}  // namespace
}  // namespace mgeo
