#pragma once

// Finite-difference geometry computed straight from the immersion, without the
// library's frames, shape operators or curvature closed forms.

#include <vector>

#include "mgeo/immersion.hpp"

namespace mgeo::testing {

/// Product-form curvature R(X,Y,Z,W) = sum_i c_i [<Y_i,Z_i><X_i,W_i> - <X_i,Z_i><Y_i,W_i>]
/// on realization vectors, split into factor blocks.
double product_curvature(const ProductSpaceForm& space, const Vector& X, const Vector& Y,
                         const Vector& Z, const Vector& W);

/// Orthogonal projector of the realization space onto T_xM.
Matrix ambient_tangent_projector(const ProductSpaceForm& space, const Vector& x);

struct GaussOracle {
  int n = 0;
  Matrix frame_coords;          ///< coordinate vectors of the tangent frame used
  Tensor4 intrinsic;            ///< from Christoffel symbols, d/du of them by central differences
  Tensor4 extrinsic;            ///< product form + <h(X,W),h(Y,Z)> - <h(X,Z),h(Y,W)>
  std::vector<Vector> h;        ///< h(e_a, e_b) as realization vectors, index a*n+b
  double intrinsic_tau = 0.0;
};

/// Evaluated in the tangent frame with coordinate vectors `frame_coords` (columns,
/// orthonormal for the induced metric). `step` is the difference step.
GaussOracle gauss_oracle(const ImmersionSpec& spec, const std::vector<double>& u,
                         const Matrix& frame_coords, double step = 1e-4);

/// R(X,Y,Z,W) for frame-coordinate vectors.
double contract(const Tensor4& R, const Vector& X, const Vector& Y, const Vector& Z,
                const Vector& W);

/// g(R_perp(e_a, e_b) nu_t, nu_s) from the normal connection forms of a smooth
/// normal frame that equals `normal_frame` at u, by nested central differences.
NormalCurvature normal_connection_oracle(const ImmersionSpec& spec, const std::vector<double>& u,
                                         const Matrix& frame_coords, const Matrix& normal_frame,
                                         double step = 1e-4);

}  // namespace mgeo::testing
