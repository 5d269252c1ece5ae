#pragma once

// Detectors for the shape-operator patterns of the equality cases. Each tests
// basis-invariant necessary conditions and reports their residuals; none of
// them searches for the exact bases of the closed-form patterns.

#include <string>
#include <utility>
#include <vector>

#include "mgeo/metallic.hpp"

namespace mgeo {

struct OmegaData;

enum class PatternKind { none, wintgen, chen, casorati, umbilical, shape_ricci };
const char* to_string(PatternKind k);

struct EqualityPattern {
  PatternKind kind = PatternKind::none;
  double residual = 0.0;  ///< max of the component residuals
  std::vector<std::pair<std::string, double>> fitted;      ///< alpha1, beta, nu, a, ...
  std::vector<std::pair<std::string, double>> components;  ///< named residuals

  double param(const std::string& name) const;
};

/// Traceless parts span at most two normal directions with equal singular values;
/// on that plane they anticommute and share a support of rank <= 2. Normal
/// directions orthogonal to it act as multiples of I.
EqualityPattern wintgen_pattern(const std::vector<Matrix>& shape_ops);

/// Block structure in the tangent frame `frame` (columns grouped by `tuple`,
/// remaining columns last) and a normal frame whose first vector is along H
/// (H in normal-frame components). nu = n |H| / (n + k - sum n_j).
EqualityPattern chen_pattern(const std::vector<Matrix>& shape_ops, const Vector& H,
                             const Matrix& frame, const std::vector<int>& tuple);

/// One normal direction carries all of the second fundamental form, with
/// eigenvalues a (n-1 times) and a (n^2 - n)/u.
EqualityPattern casorati_pattern(const std::vector<Matrix>& shape_ops, double u);

/// max_r |A_r - (tr A_r / n) I| (Frobenius).
EqualityPattern umbilical_pattern(const std::vector<Matrix>& shape_ops);

/// Shape operators vanish on normal directions orthogonal to H, and the partial
/// Ricci curvature of k-plane sections is constant. The size of that constant is
/// reported as the component "info_ricci_magnitude" but is not part of the residual.
EqualityPattern shape_ricci_pattern(const std::vector<Matrix>& shape_ops, const Vector& H,
                                    const OmegaData& omega);

}  // namespace mgeo
