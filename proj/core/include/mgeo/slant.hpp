#pragma once

// Slant and bi-slant analysis of the tangential part T of phi.

#include <optional>

#include "mgeo/immersion.hpp"

namespace mgeo {

inline constexpr double kSlantAngleTol = 1e-6;
inline constexpr double kSlantLemmaTol = 1e-7;

struct SlantData {
  Matrix D1_basis;  ///< n x d1, orthonormal, in tangent-frame coordinates
  Matrix D2_basis;  ///< n x d2
  int d1 = 0;
  int d2 = 0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double angle_dev1 = 0.0;  ///< max |theta(X) - theta| over the D1 frame
  double angle_dev2 = 0.0;
  Matrix P1;
  Matrix P2;
  double tr_TP1 = 0.0;
  double tr_TP2 = 0.0;
  double tr_T = 0.0;
  double lemma_residual_1 = 0.0;  ///< max |(P1 T)^2 X - cos^2 theta1 (p P1 T X + q X)|
  double lemma_residual_2 = 0.0;
  double theta_residual = 0.0;    ///< the cos^2-weighted norm identity, both distributions
  double projector_residual = 0.0;

  bool slant1() const { return angle_dev1 <= kSlantAngleTol && lemma_residual_1 <= kSlantLemmaTol; }
  bool slant2() const {
    return d2 == 0 || (angle_dev2 <= kSlantAngleTol && lemma_residual_2 <= kSlantLemmaTol);
  }
  bool bislant() const { return slant1() && slant2(); }

  /// cos^2(theta_i) (p tr(T P_i) + d_i q), i in {1, 2}.
  double vartheta(int i, const MetallicParams& params) const;
};

/// Converts vectors given as coefficients of d/du_i to tangent-frame coordinates.
Matrix to_frame_coords(const SubmanifoldPointData& pd, const Matrix& coord_vectors);

/// D1, D2 in tangent-frame coordinates (columns need not be orthonormal). With
/// neither given, D1 = TN and D2 = {0}; with only D1, D2 is its orthogonal
/// complement. Throws ArgumentError if the distributions are not orthogonal and
/// ClassificationError if they are degenerate or do not span TN. An empty D2 gets
/// theta2 = theta1.
SlantData slant_analysis(const PhiDecomposition& phi, const MetallicParams& params,
                         const std::optional<Matrix>& D1 = std::nullopt,
                         const std::optional<Matrix>& D2 = std::nullopt);

}  // namespace mgeo
