#include "mgeo/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mgeo/errors.hpp"

namespace mgeo {

namespace curvature {

Vector product_form(double c1, double c2, const Vector& f_diag, const Vector& X,
                    const Vector& Y, const Vector& Z) {
  const double K = c1 + c2;
  const double D = c1 - c2;
  const Vector FX = f_diag.cwiseProduct(X);
  const Vector FY = f_diag.cwiseProduct(Y);
  const double gYZ = Y.dot(Z), gXZ = X.dot(Z);
  const double fYZ = FY.dot(Z), fXZ = FX.dot(Z);
  return 0.25 * K * (gYZ * X - gXZ * Y + fYZ * FX - fXZ * FY) +
         0.25 * D * (fYZ * X - fXZ * Y + gYZ * FX - gXZ * FY);
}

Vector metallic_form(double c1, double c2, const MetallicParams& mp, Sign sign,
                     const Vector& phi_diag, const Vector& X, const Vector& Y, const Vector& Z) {
  const double K = c1 + c2;
  const double D = c1 - c2;
  const double p = mp.p, a = mp.alpha, s = to_double(sign);
  const Vector PX = phi_diag.cwiseProduct(X);
  const Vector PY = phi_diag.cwiseProduct(Y);
  const double gYZ = Y.dot(Z), gXZ = X.dot(Z);
  const double pYZ = PY.dot(Z), pXZ = PX.dot(Z);
  const Vector k_part = (a * a + p * p) * (gYZ * X - gXZ * Y) + 4.0 * (pYZ * PX - pXZ * PY) +
                        2.0 * p * (pXZ * Y + gXZ * PY - pYZ * X - gYZ * PX);
  const Vector d_part = pYZ * X + gYZ * PX - pXZ * Y - gXZ * PY + p * (gXZ * Y - gYZ * X);
  return (K / (4.0 * a * a)) * k_part + (s * D / (2.0 * a)) * d_part;
}

Tensor4 product_tensor(double c1, double c2, const Vector& f_diag, const Matrix& frame) {
  const int k = static_cast<int>(frame.cols());
  const Matrix G = frame.transpose() * frame;
  const Matrix F = frame.transpose() * f_diag.asDiagonal() * frame;
  const double K = 0.25 * (c1 + c2), D = 0.25 * (c1 - c2);
  Tensor4 R(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          R(a, b, c, d) =
              K * (G(b, c) * G(a, d) - G(a, c) * G(b, d) + F(b, c) * F(a, d) - F(a, c) * F(b, d)) +
              D * (F(b, c) * G(a, d) - F(a, c) * G(b, d) + G(b, c) * F(a, d) - G(a, c) * F(b, d));
        }
  return R;
}

Tensor4 metallic_tensor(double c1, double c2, const MetallicParams& mp, Sign sign,
                        const Vector& phi_diag, const Matrix& frame) {
  const int k = static_cast<int>(frame.cols());
  const Matrix G = frame.transpose() * frame;
  const Matrix P = frame.transpose() * phi_diag.asDiagonal() * frame;
  const double p = mp.p, al = mp.alpha;
  const double kc = (c1 + c2) / (4.0 * al * al);
  const double dc = to_double(sign) * (c1 - c2) / (2.0 * al);
  Tensor4 R(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          const double kp = (al * al + p * p) * (G(b, c) * G(a, d) - G(a, c) * G(b, d)) +
                            4.0 * (P(b, c) * P(a, d) - P(a, c) * P(b, d)) +
                            2.0 * p *
                                (P(a, c) * G(b, d) + G(a, c) * P(b, d) - P(b, c) * G(a, d) -
                                 G(b, c) * P(a, d));
          const double dp = P(b, c) * G(a, d) + G(b, c) * P(a, d) - P(a, c) * G(b, d) -
                            G(a, c) * P(b, d) + p * (G(a, c) * G(b, d) - G(b, c) * G(a, d));
          R(a, b, c, d) = kc * kp + dc * dp;
        }
  return R;
}

}  // namespace curvature

namespace {

void check_factor(int i, int m, double c, FactorRealization& f) {
  const std::string name = "factor " + std::to_string(i + 1);
  if (m < 1) throw RealizationError(name + ": dimension must be >= 1");
  if (!std::isfinite(c)) throw RealizationError(name + ": curvature is not finite");
  if (f.kind == FactorKind::flat) {
    if (c != 0.0) {
      throw RealizationError(name + ": flat realization requires c = 0 (got " +
                             std::to_string(c) + ")");
    }
    return;
  }
  if (c <= 0.0) {
    throw RealizationError(name + ": sphere realization requires c > 0 (got " +
                           std::to_string(c) + ")");
  }
  if (f.radius <= 0.0) {
    f.radius = 1.0 / std::sqrt(c);
  } else if (std::abs(c * f.radius * f.radius - 1.0) > 1e-12) {
    throw RealizationError(name + ": sphere radius " + std::to_string(f.radius) +
                           " does not match c = 1/radius^2");
  }
}

// Largest deviation between the two closed forms over fixed pseudo-random triples.
double form_deviation(const ProductSpaceForm& s, Sign sign) {
  const int m = s.dim();
  Vector f(m), phi(m);
  const double plus = 0.5 * s.params().p + 0.5 * s.params().alpha;
  const double minus = 0.5 * s.params().p - 0.5 * s.params().alpha;
  const bool first = s.branch() == Branch::first;
  for (int i = 0; i < m; ++i) {
    f(i) = i < s.m1() ? 1.0 : -1.0;
    phi(i) = (f(i) > 0) == first ? plus : minus;
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> N(0.0, 1.0);
  auto rnd = [&] {
    Vector v(m);
    for (int i = 0; i < m; ++i) v(i) = N(rng);
    return v;
  };
  double dev = 0.0;
  for (int t = 0; t < 32; ++t) {
    const Vector X = rnd(), Y = rnd(), Z = rnd();
    const Vector a = curvature::product_form(s.c1(), s.c2(), f, X, Y, Z);
    const Vector b = curvature::metallic_form(s.c1(), s.c2(), s.params(), sign, phi, X, Y, Z);
    dev = std::max(dev, (a - b).lpNorm<Eigen::Infinity>());
  }
  return dev;
}

}  // namespace

ProductSpaceForm make_space(const SpaceSpec& spec) {
  ProductSpaceForm s;
  s.params_ = metallic_constants(spec.p, spec.q);
  s.m_[0] = spec.m1;
  s.m_[1] = spec.m2;
  s.c_[0] = spec.c1;
  s.c_[1] = spec.c2;
  s.factor_[0] = spec.factor1;
  s.factor_[1] = spec.factor2;
  for (int i = 0; i < 2; ++i) {
    check_factor(i, s.m_[i], s.c_[i], s.factor_[i]);
    s.size_[i] = s.m_[i] + (s.factor_[i].kind == FactorKind::sphere ? 1 : 0);
  }
  s.branch_ = spec.branch;

  const int E = s.embedding_dim();
  s.f_diag_ = Vector(E);
  s.phi_diag_ = Vector(E);
  const double bs = spec.branch == Branch::first ? 1.0 : -1.0;
  for (int k = 0; k < E; ++k) {
    const double f = k < s.size_[0] ? 1.0 : -1.0;
    s.f_diag_(k) = f;
    s.phi_diag_(k) = 0.5 * s.params_.p + bs * 0.5 * s.params_.alpha * f;
  }

  const Sign natural = spec.branch == Branch::first ? Sign::plus : Sign::minus;
  const double dev_nat = form_deviation(s, natural);
  const double dev_opp = form_deviation(s, opposite(natural));
  const double scale = 1e-9 * std::max(1.0, std::abs(s.c1()) + std::abs(s.c2()));
  s.matched_sign_ = dev_nat <= dev_opp + scale ? natural : opposite(natural);
  s.matched_dev_ = s.matched_sign_ == natural ? dev_nat : dev_opp;
  s.opposite_dev_ = s.matched_sign_ == natural ? dev_opp : dev_nat;
  if (s.matched_dev_ > scale) {
    throw InvalidStructureError("metallic and product curvature forms disagree for both signs");
  }
  s.curv_sign_ = spec.curv_sign.value_or(s.matched_sign_);
  return s;
}

double off_manifold_residual(const ProductSpaceForm& space, const Vector& coords) {
  if (coords.size() != space.embedding_dim()) {
    throw ArgumentError("point has " + std::to_string(coords.size()) +
                        " coordinates, realization needs " +
                        std::to_string(space.embedding_dim()));
  }
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const FactorRealization& f = space.factor(i);
    if (f.kind != FactorKind::sphere) continue;
    const double r = coords.segment(space.offset(i), space.block_size(i)).norm();
    worst = std::max(worst, std::abs(r - f.radius) / f.radius);
  }
  return worst;
}

AmbientPoint make_point(const ProductSpaceForm& space, const Vector& coords, double tol) {
  if (!coords.allFinite()) throw OffManifoldError("point has non-finite coordinates");
  const double res = off_manifold_residual(space, coords);
  if (res > tol) {
    throw OffManifoldError("point is off the realized manifold (relative sphere residual " +
                           std::to_string(res) + ")");
  }
  return AmbientPoint{coords};
}

AmbientTangent make_tangent(const ProductSpaceForm& space, const AmbientPoint& x,
                            const Vector& v, double tol) {
  if (v.size() != space.embedding_dim()) throw ArgumentError("tangent vector has wrong dimension");
  for (int i = 0; i < 2; ++i) {
    if (space.factor(i).kind != FactorKind::sphere) continue;
    const auto y = x.coords.segment(space.offset(i), space.block_size(i));
    const auto w = v.segment(space.offset(i), space.block_size(i));
    const double d = std::abs(y.dot(w));
    if (d > tol * std::max(1.0, y.norm() * w.norm())) {
      throw ArgumentError("vector is not tangent to sphere factor " + std::to_string(i + 1));
    }
  }
  return AmbientTangent{x, v};
}

AmbientTangent project_to_manifold_tangent(const ProductSpaceForm& space, const AmbientPoint& x,
                                           const Vector& v) {
  if (v.size() != space.embedding_dim() || x.coords.size() != space.embedding_dim()) {
    throw ArgumentError("projection: dimension mismatch");
  }
  Vector out = v;
  for (int i = 0; i < 2; ++i) {
    if (space.factor(i).kind != FactorKind::sphere) continue;
    const auto y = x.coords.segment(space.offset(i), space.block_size(i));
    auto w = out.segment(space.offset(i), space.block_size(i));
    w -= (y.dot(w) / y.squaredNorm()) * y;
  }
  return AmbientTangent{x, out};
}

Matrix adapted_frame(const ProductSpaceForm& space, const AmbientPoint& x) {
  make_point(space, x.coords, kConstraintTol);
  const int E = space.embedding_dim();
  Matrix frame = Matrix::Zero(E, space.dim());
  int col = 0;
  for (int i = 0; i < 2; ++i) {
    const int off = space.offset(i), sz = space.block_size(i), m = space.factor_dim(i);
    if (space.factor(i).kind == FactorKind::flat) {
      for (int k = 0; k < m; ++k) frame(off + k, col++) = 1.0;
      continue;
    }
    const Vector y = x.coords.segment(off, sz);
    Matrix cand = Matrix::Identity(sz, sz) - y * y.transpose() / y.squaredNorm();
    const Matrix block = extend_orthonormal(Matrix(sz, 0), cand, m);
    frame.block(off, col, sz, m) = block;
    col += m;
  }
  return frame;
}

Endomorphism product_structure_at(const ProductSpaceForm& space, const AmbientPoint& x) {
  make_point(space, x.coords, kConstraintTol);
  Matrix F = Matrix::Zero(space.dim(), space.dim());
  for (int k = 0; k < space.dim(); ++k) F(k, k) = k < space.m1() ? 1.0 : -1.0;
  return Endomorphism(F);
}

Endomorphism metallic_structure_at(const ProductSpaceForm& space, const AmbientPoint& x) {
  return metallic_from_product(product_structure_at(space, x), space.params(), space.branch());
}

namespace {

void check_triple(const ProductSpaceForm& space, const AmbientTangent& X, const AmbientTangent& Y,
                  const AmbientTangent& Z) {
  const auto same = [](const AmbientPoint& a, const AmbientPoint& b) {
    return a.coords.size() == b.coords.size() &&
           (a.coords - b.coords).lpNorm<Eigen::Infinity>() <= 1e-12 * std::max(1.0, a.coords.norm());
  };
  if (!same(X.base, Y.base) || !same(X.base, Z.base)) {
    throw ArgumentError("curvature arguments have different base points");
  }
  make_point(space, X.base.coords, kConstraintTol);
  make_tangent(space, X.base, X.vec, kConstraintTol);
  make_tangent(space, X.base, Y.vec, kConstraintTol);
  make_tangent(space, X.base, Z.vec, kConstraintTol);
}

}  // namespace

AmbientTangent ambient_curvature_product(const ProductSpaceForm& space, const AmbientTangent& X,
                                         const AmbientTangent& Y, const AmbientTangent& Z) {
  check_triple(space, X, Y, Z);
  return AmbientTangent{X.base, curvature::product_form(space.c1(), space.c2(), space.f_diag(),
                                                        X.vec, Y.vec, Z.vec)};
}

AmbientTangent ambient_curvature_metallic(const ProductSpaceForm& space, const AmbientTangent& X,
                                          const AmbientTangent& Y, const AmbientTangent& Z,
                                          Sign sign) {
  check_triple(space, X, Y, Z);
  return AmbientTangent{X.base,
                        curvature::metallic_form(space.c1(), space.c2(), space.params(), sign,
                                                 space.phi_diag(), X.vec, Y.vec, Z.vec)};
}

AmbientTangent ambient_curvature_metallic(const ProductSpaceForm& space, const AmbientTangent& X,
                                          const AmbientTangent& Y, const AmbientTangent& Z) {
  return ambient_curvature_metallic(space, X, Y, Z, space.curv_sign());
}

Tensor4 ambient_tensor(const ProductSpaceForm& space, const Matrix& frame, Sign sign) {
  return curvature::metallic_tensor(space.c1(), space.c2(), space.params(), sign,
                                    space.phi_diag(), frame);
}

}  // namespace mgeo
