#pragma once

// The product space form M1(c1) x M2(c2), realized in Euclidean space: a flat
// factor of dimension m is R^m, a sphere factor of dimension m is the sphere of
// radius 1/sqrt(c) in R^(m+1). Coordinates of factor 1 come first.

#include <optional>

#include "mgeo/metallic.hpp"
#include "mgeo/tensor.hpp"

namespace mgeo {

inline constexpr double kPointTol = 1e-10;
/// Looser tolerance for points produced by evaluating immersions.
inline constexpr double kConstraintTol = 1e-8;

enum class FactorKind { flat, sphere };

struct FactorRealization {
  FactorKind kind = FactorKind::flat;
  double radius = 0.0;  ///< sphere only

  static FactorRealization flat() { return {}; }
  static FactorRealization sphere(double radius) { return {FactorKind::sphere, radius}; }
};

struct SpaceSpec {
  int m1 = 1;
  int m2 = 1;
  double c1 = 0.0;
  double c2 = 0.0;
  int p = 1;
  int q = 1;
  Branch branch = Branch::first;
  /// Sign of the (c1 - c2) term in the metallic curvature form. Left empty, the
  /// sign matching the product form for `branch` is used.
  std::optional<Sign> curv_sign;
  FactorRealization factor1;
  FactorRealization factor2;
};

class ProductSpaceForm {
 public:
  int m1() const { return m_[0]; }
  int m2() const { return m_[1]; }
  int dim() const { return m_[0] + m_[1]; }
  int embedding_dim() const { return size_[0] + size_[1]; }
  double c1() const { return c_[0]; }
  double c2() const { return c_[1]; }
  const MetallicParams& params() const { return params_; }
  Branch branch() const { return branch_; }
  Sign curv_sign() const { return curv_sign_; }

  /// Sign for which the metallic form reproduces the product form (found at
  /// construction). When c1 = c2 both signs agree and this is the branch's sign.
  Sign matched_sign() const { return matched_sign_; }
  bool curv_sign_matched() const { return curv_sign_ == matched_sign_; }
  /// Max deviation between the two curvature forms over the construction
  /// cross-check, for the matched sign and for the opposite one.
  double matched_deviation() const { return matched_dev_; }
  double opposite_deviation() const { return opposite_dev_; }

  const FactorRealization& factor(int i) const { return factor_[i]; }
  double curvature(int i) const { return c_[i]; }
  int factor_dim(int i) const { return m_[i]; }
  /// Realization coordinates of factor i are [offset(i), offset(i) + block_size(i)).
  int offset(int i) const { return i == 0 ? 0 : size_[0]; }
  int block_size(int i) const { return size_[i]; }

  /// F and phi act diagonally on realization coordinates.
  const Vector& f_diag() const { return f_diag_; }
  const Vector& phi_diag() const { return phi_diag_; }
  Vector apply_F(const Vector& v) const { return f_diag_.cwiseProduct(v); }
  Vector apply_phi(const Vector& v) const { return phi_diag_.cwiseProduct(v); }

 private:
  friend ProductSpaceForm make_space(const SpaceSpec& spec);

  int m_[2] = {1, 1};
  int size_[2] = {1, 1};
  double c_[2] = {0.0, 0.0};
  FactorRealization factor_[2];
  MetallicParams params_;
  Branch branch_ = Branch::first;
  Sign curv_sign_ = Sign::plus;
  Sign matched_sign_ = Sign::plus;
  double matched_dev_ = 0.0;
  double opposite_dev_ = 0.0;
  Vector f_diag_;
  Vector phi_diag_;
};

/// Throws RealizationError for a sphere with c <= 0 or radius != 1/sqrt(c), a
/// flat factor with c != 0, or a factor dimension < 1; DomainError for bad p, q.
ProductSpaceForm make_space(const SpaceSpec& spec);

struct AmbientPoint {
  Vector coords;
};

struct AmbientTangent {
  AmbientPoint base;
  Vector vec;
};

/// Checks that every sphere block lies on its sphere to `tol` (relative).
AmbientPoint make_point(const ProductSpaceForm& space, const Vector& coords,
                        double tol = kPointTol);
/// Largest relative violation of the sphere constraints (0 for flat factors).
double off_manifold_residual(const ProductSpaceForm& space, const Vector& coords);

/// Checks that sphere blocks of v are orthogonal to the position block.
AmbientTangent make_tangent(const ProductSpaceForm& space, const AmbientPoint& x,
                            const Vector& v, double tol = kPointTol);

/// Removes the radial component of each sphere block of v.
AmbientTangent project_to_manifold_tangent(const ProductSpaceForm& space,
                                           const AmbientPoint& x, const Vector& v);

/// Orthonormal frame of T_xM as an (embedding_dim x dim) matrix: factor-1
/// vectors first. Sphere blocks use the projected coordinate directions,
/// orthonormalized in index order.
Matrix adapted_frame(const ProductSpaceForm& space, const AmbientPoint& x);

/// F and phi on T_xM in the adapted frame.
Endomorphism product_structure_at(const ProductSpaceForm& space, const AmbientPoint& x);
Endomorphism metallic_structure_at(const ProductSpaceForm& space, const AmbientPoint& x);

/// R(X,Y)Z from the locally product closed form.
AmbientTangent ambient_curvature_product(const ProductSpaceForm& space, const AmbientTangent& X,
                                         const AmbientTangent& Y, const AmbientTangent& Z);
/// R(X,Y)Z from the metallic closed form, with the space's curv_sign or `sign`.
AmbientTangent ambient_curvature_metallic(const ProductSpaceForm& space, const AmbientTangent& X,
                                          const AmbientTangent& Y, const AmbientTangent& Z);
AmbientTangent ambient_curvature_metallic(const ProductSpaceForm& space, const AmbientTangent& X,
                                          const AmbientTangent& Y, const AmbientTangent& Z,
                                          Sign sign);

namespace curvature {

// Raw closed forms on realization vectors; no point or tangency checks. c1, c2 may
// have any sign here.

Vector product_form(double c1, double c2, const Vector& f_diag, const Vector& X,
                    const Vector& Y, const Vector& Z);
Vector metallic_form(double c1, double c2, const MetallicParams& params, Sign sign,
                     const Vector& phi_diag, const Vector& X, const Vector& Y, const Vector& Z);

/// R(e_a, e_b, e_c, e_d) = g(R(e_a, e_b) e_c, e_d) for the columns of `frame`.
Tensor4 product_tensor(double c1, double c2, const Vector& f_diag, const Matrix& frame);
Tensor4 metallic_tensor(double c1, double c2, const MetallicParams& params, Sign sign,
                        const Vector& phi_diag, const Matrix& frame);

}  // namespace curvature

/// Metallic-form curvature tensor of `space` on the given realization frame.
Tensor4 ambient_tensor(const ProductSpaceForm& space, const Matrix& frame, Sign sign);
inline Tensor4 ambient_tensor(const ProductSpaceForm& space, const Matrix& frame) {
  return ambient_tensor(space, frame, space.curv_sign());
}

}  // namespace mgeo
