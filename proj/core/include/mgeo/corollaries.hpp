#pragma once

// The four special classes of bi-slant submanifolds and their specialized
// inequalities. specialize() evaluates each theorem's bi-slant right-hand side
// with the class's angles substituted and, independently, the row formula of
// the class as tabulated; the two must agree.

#include <optional>
#include <string_view>

#include "mgeo/inequalities.hpp"

namespace mgeo {

enum class SubmanifoldType { semi_slant, hemi_slant, semi_invariant, slant };
const char* to_string(SubmanifoldType t);
std::optional<SubmanifoldType> parse_submanifold_type(std::string_view name);
inline constexpr SubmanifoldType kAllTypes[] = {SubmanifoldType::semi_slant,
                                                SubmanifoldType::hemi_slant,
                                                SubmanifoldType::semi_invariant,
                                                SubmanifoldType::slant};

/// (theta1, theta2) for the class; `theta` is the free angle of semi-slant,
/// hemi-slant and slant submanifolds.
std::pair<double, double> class_angles(SubmanifoldType t, double theta);

/// Throws ClassificationError naming the first angle that does not match the
/// class (tolerance kSlantAngleTol), or a distribution that is not slant.
/// Returns the free angle theta.
double check_class(const SlantData& slant, SubmanifoldType t);

/// Everything a right-hand side can depend on besides the ambient constants.
struct TheoremInputs {
  TraceData traces;
  int d1 = 0;
  int d2 = 0;
  double rho = 0.0;
  double rho_perp = 0.0;
  double tau = 0.0;
  double H_sq = 0.0;
  double delta_c = 0.0;
  double omega_k = 0.0;
  ChenConstants chen;
  int chen_k = 1;
};

struct Specialization {
  double bislant = 0.0;  ///< bi-slant formula with the class angles
  double table = 0.0;    ///< the class's own row formula
  double difference = 0.0;
};

/// Pure evaluation on given data; no classification check.
Specialization specialize(TheoremId thm, SubmanifoldType type, const AmbientConstants& amb,
                          Sign s, Tr2Reading reading, double theta, const TheoremInputs& in);

/// Classifies `b.slant` against `type` first (ClassificationError on mismatch).
Specialization specialize(TheoremId thm, SubmanifoldType type, const PointBundle& b,
                          const TheoremInputs& in, Tr2Reading reading = Tr2Reading::outer);

}  // namespace mgeo
