#pragma once

// Both sides of the five curvature inequalities for bi-slant submanifolds of a
// locally metallic product space form, evaluated at one point.
//
// Every right-hand side is a pure function of the point's invariants, the trace
// data of T and the ambient constants. Two readings are left open by the
// closed forms and are carried as explicit flags: the meaning of "tr^2 phi"
// and the sign in front of every (c1 - c2) term.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgeo/equality.hpp"
#include "mgeo/invariants.hpp"
#include "mgeo/slant.hpp"

namespace mgeo {

enum class TheoremId { wintgen, chen, shape_ricci, mean_scalar, casorati };
const char* to_string(TheoremId t);
/// Accepts the names produced by to_string ("wintgen", "chen", "shape-ricci",
/// "mean-scalar", "casorati").
std::optional<TheoremId> parse_theorem(std::string_view name);
inline constexpr TheoremId kAllTheorems[] = {TheoremId::wintgen, TheoremId::chen,
                                             TheoremId::shape_ricci, TheoremId::mean_scalar,
                                             TheoremId::casorati};

/// outer: tr^2 phi = (tr T)^2. trace_of_square: tr^2 phi = tr(T^2).
enum class Tr2Reading { outer, trace_of_square };
const char* to_string(Tr2Reading r);

struct TraceData {
  double tr_T = 0.0;
  double tr_T_outer = 0.0;  ///< (tr T)^2
  double tr_T2 = 0.0;       ///< tr(T^2)
  double tr_TP1 = 0.0;
  double tr_TP2 = 0.0;
  double norm_T_sq = 0.0;   ///< |T|^2 = sum_i g(T e_i, T e_i)

  double tr2(Tr2Reading r) const { return r == Tr2Reading::outer ? tr_T_outer : tr_T2; }
};
TraceData trace_data(const Matrix& T, const SlantData& slant);

struct AmbientConstants {
  int n = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  MetallicParams params;

  double K() const { return c1 + c2; }
  /// s (c1 - c2).
  double D(Sign s) const { return to_double(s) * (c1 - c2); }
};

struct ShapeRicciConstants {
  double omega = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
};
ShapeRicciConstants shape_ricci_constants(const AmbientConstants& amb, Sign s,
                                          const TraceData& tr, Tr2Reading reading);

/// The ambient part of 2 tau in the form the theorems use:
/// n(n-1)K(p^2+2q)/(2 alpha^2) + (K/alpha^2)[(n-1)(n tr^2 phi - p tr phi) - vartheta]
/// + (n-1) D (2 tr phi - n p)/(2 alpha), with vartheta = vartheta_1 + vartheta_2.
double ambient_2tau_closed_form(const AmbientConstants& amb, Sign s, const TraceData& tr,
                          Tr2Reading reading, double vartheta);
/// sum_{i != j} R~(e_i, e_j, e_j, e_i) summed in closed form from the metallic
/// curvature:  n(n-1)K(p^2+2q)/(2 alpha^2) + (K/alpha^2)[(tr T)^2 - |T|^2 - p(n-1) tr T]
/// + (n-1) D (2 tr T - n p)/(2 alpha).
double ambient_2tau_exact(const AmbientConstants& amb, Sign s, const TraceData& tr);
/// The value of tr^2 phi for which ambient_2tau_closed_form equals ambient_2tau_exact;
/// NaN when K = 0 or n < 2.
double implied_tr2(const AmbientConstants& amb, const TraceData& tr, double vartheta);

// Right-hand sides of the bi-slant theorems. `vartheta` is
// cos^2 theta1 (p tr TP1 + d1 q) + cos^2 theta2 (p tr TP2 + d2 q).
namespace rhs {
double wintgen(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
               double vartheta, double rho, double rho_perp);
double chen(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
            double vartheta, const ChenConstants& cst, int k, double H_sq);
double shape_ricci(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                   double vartheta, double omega_k);
double mean_scalar(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                   double vartheta, double tau);
double casorati(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                double vartheta, double delta_c);
}  // namespace rhs

/// All per-point data the verifiers need.
struct PointBundle {
  AmbientConstants amb;
  Sign sign = Sign::plus;  ///< sign the geometry was built with
  PointGeometry geom;
  Matrix T;
  SlantData slant;
  TraceData traces;

  double vartheta() const {
    return slant.vartheta(1, amb.params) + slant.vartheta(2, amb.params);
  }
};

/// D1 / D2 are in tangent-frame coordinates (see slant_analysis).
PointBundle make_bundle(const ImmersionSpec& spec, const SubmanifoldPointData& pd,
                        const std::optional<Matrix>& D1 = std::nullopt,
                        const std::optional<Matrix>& D2 = std::nullopt);
PointBundle make_bundle(const AmbientConstants& amb, Sign sign, PointGeometry geom, Matrix T,
                        SlantData slant);

struct VerifyOptions {
  Tr2Reading reading = Tr2Reading::outer;
  double eq_tol = 1e-8;
  OptimizerOptions optimizer;
};

struct InequalityResult {
  TheoremId theorem = TheoremId::wintgen;
  std::string label;  ///< "tuple=(2,2)", "k=3", "u=1", or empty
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< >= 0 when the inequality holds
  bool holds = false;  ///< slack >= -eq_tol
  bool equality = false;
  double eq_tol = 0.0;
  Tr2Reading reading = Tr2Reading::outer;
  Sign sign = Sign::plus;
  /// Slack with the other sign in front of (c1 - c2); set only when c1 != c2.
  std::optional<double> opposite_sign_slack;
  /// Slack under the other tr^2 phi reading.
  double other_reading_slack = 0.0;
  EqualityPattern equality_case;
  /// Intermediate quantities worth reporting (delta, Omega_k, omegas, ...).
  std::vector<std::pair<std::string, double>> details;
};

InequalityResult verify_wintgen(const PointBundle& b, const VerifyOptions& opt = {});
/// Throws ArgumentError for a tuple outside S(n).
InequalityResult verify_chen_delta(const PointBundle& b, const std::vector<int>& tuple,
                                   const VerifyOptions& opt = {});
/// LHS is (tr A_xi)^2 for the unit normal xi along H, i.e. n^2 |H|^2 (0 when H = 0).
/// Throws ArgumentError unless 2 <= k <= n.
InequalityResult verify_shape_ricci(const PointBundle& b, int k, const VerifyOptions& opt = {});
InequalityResult verify_mean_scalar(const PointBundle& b, const VerifyOptions& opt = {});
/// Throws ArgumentError for u <= 0 or u = n(n-1).
InequalityResult verify_casorati(const PointBundle& b, double u, const VerifyOptions& opt = {});

/// One line of the derivation check: direct 2 tau against the closed-form
/// assembly ambient_2tau_closed_form + 2 sum_r sum_{i<j} (h_ii h_jj - h_ij^2).
struct DerivationRow {
  Tr2Reading reading = Tr2Reading::outer;
  Sign sign = Sign::plus;
  double residual = 0.0;  ///< assembly - direct
};
struct DerivationCheck {
  double tau_direct_2 = 0.0;  ///< 2 tau from the Gauss-equation tensor
  double extrinsic = 0.0;     ///< 2 sum_r sum_{i<j} (h_ii h_jj - h_ij^2)
  double ambient_direct = 0.0;
  double ambient_exact = 0.0;  ///< closed form, geometry's sign
  std::vector<DerivationRow> rows;  ///< all four (reading, sign) combinations
  double implied_tr2 = 0.0;
  /// The combinations within `tol`; empty when none matches.
  std::vector<std::size_t> matching(double tol) const;
};
DerivationCheck check_derivation(const PointBundle& b);

}  // namespace mgeo
