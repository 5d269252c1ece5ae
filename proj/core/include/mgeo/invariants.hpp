#pragma once

// Scalar curvature invariants of a submanifold at a point: tau, rho, rho_perp,
// Casorati curvatures, Chen delta-invariants and Omega_k.

#include <optional>
#include <vector>

#include "mgeo/frame_optimizer.hpp"
#include "mgeo/immersion.hpp"

namespace mgeo {

/// Everything the invariants need at one point, expressed in the orthonormal
/// frame [e_1..e_n | nu_1..nu_k].
struct PointGeometry {
  int n = 0;
  int k = 0;
  std::vector<Matrix> shape_ops;
  Tensor4 ambient;  ///< (n+k)^4 ambient curvature
  Tensor4 R;        ///< n^4 intrinsic curvature from the Gauss equation
  NormalCurvature Rperp;
  Vector H;
  double H_sq = 0.0;
};

/// R_abcd = R~_abcd + sum_r (h^r_ad h^r_bc - h^r_ac h^r_bd).
Tensor4 gauss_tensor(const Tensor4& ambient, const std::vector<Matrix>& shape_ops);

/// `ambient` must have dimension n + shape_ops.size(); shape operators must be
/// symmetric n x n. Throws ArgumentError otherwise.
PointGeometry make_geometry(Tensor4 ambient, std::vector<Matrix> shape_ops);
PointGeometry geometry_at(const ImmersionSpec& spec, const SubmanifoldPointData& pd, Sign sign);
inline PointGeometry geometry_at(const ImmersionSpec& spec, const SubmanifoldPointData& pd) {
  return geometry_at(spec, pd, spec.space.curv_sign());
}

/// K(X ^ Y) for tangent-frame coordinate vectors X, Y (need not be orthonormal).
double sectional_curvature(const PointGeometry& g, const Vector& X, const Vector& Y);
double scalar_curvature(const PointGeometry& g);
/// 2 tau / (n (n-1)); 0 when n = 1.
double normalized_scalar_curvature(const PointGeometry& g);
/// (2 / (n (n-1))) sqrt(sum_{i<j} sum_{t<s} R_perp(i,j,t,s)^2); 0 when n = 1 or k < 2.
double normal_scalar_curvature(const NormalCurvature& Rperp);

struct CurvatureInvariants {
  double tau = 0.0;
  double rho = 0.0;
  double rho_perp = 0.0;
  double H_sq = 0.0;
  double C = 0.0;
};
CurvatureInvariants curvature_invariants(const PointGeometry& g);

/// C = (1/n) sum_r |A_r|^2.
double casorati(const std::vector<Matrix>& shape_ops);
/// C(W) for the hyperplane W with conormal w (need not be unit; zero throws).
double casorati_hyperplane(const std::vector<Matrix>& shape_ops, const Vector& w);
/// a(u) = (n-1)(u+n)(n^2-n-u)/(n u).
double casorati_a(int n, double u);

struct CasoratiData {
  double u = 0.0;
  double a_u = 0.0;
  double C = 0.0;
  double C_W_inf = 0.0;
  double C_W_sup = 0.0;
  double delta_C = 0.0;      ///< u C + a(u) inf C(W)
  double delta_C_hat = 0.0;  ///< u C + a(u) sup C(W)
  Vector argmin_W;
  Vector argmax_W;
  OptimumCertificate inf_cert;
  OptimumCertificate sup_cert;
  std::optional<double> grid_inf;  ///< brute-force grid values, n <= 4
  std::optional<double> grid_sup;

  bool sup_branch() const;
  /// delta_C for u < n(n-1), delta_C_hat otherwise.
  double value() const { return sup_branch() ? delta_C_hat : delta_C; }
  int n = 0;
};

/// Throws ArgumentError for n < 2, u <= 0 or u = n(n-1).
CasoratiData delta_casorati(const std::vector<Matrix>& shape_ops, double u,
                            const OptimizerOptions& opt = {});

/// Partial scalar curvature of the span of the columns of an orthonormal L.
double partial_scalar_curvature(const PointGeometry& g, const Matrix& L);
/// Ric_L(X) = sum_j K(X ^ f_j) over an orthonormal basis {X, f_j} of L; X is
/// column 0 of L.
double partial_ricci(const PointGeometry& g, const Matrix& L);

struct ChenConstants {
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};
ChenConstants chen_constants(int n, const std::vector<int>& tuple);
/// Throws ArgumentError unless k >= 1, 2 <= n_j <= n-1 and sum n_j <= n.
void check_chen_tuple(int n, const std::vector<int>& tuple);

struct ChenDeltaData {
  std::vector<int> tuple;
  double tau = 0.0;
  double inf_sum = 0.0;  ///< inf of sum_j tau(L_j)
  double sup_sum = 0.0;
  double delta = 0.0;
  double delta_hat = 0.0;
  ChenConstants constants;
  OptimumCertificate inf_cert;  ///< frame columns grouped by tuple entry
  OptimumCertificate sup_cert;
  std::optional<double> mc_inf;  ///< Monte-Carlo values, n <= 4
  std::optional<double> mc_sup;
};

ChenDeltaData chen_delta(const PointGeometry& g, const std::vector<int>& tuple,
                         const OptimizerOptions& opt = {});

struct OmegaData {
  int k = 0;
  double omega_k = 0.0;
  double inf_ricci = 0.0;  ///< inf Ric_L(X) = (k-1) omega_k
  double sup_ricci = 0.0;  ///< sup Ric_L(X), for the constancy diagnostic
  OptimumCertificate inf_cert;  ///< column 0 = X, columns 0..k-1 span L
  OptimumCertificate sup_cert;
  std::optional<double> mc_inf;
};

/// Throws ArgumentError unless 2 <= k <= n.
OmegaData omega_k(const PointGeometry& g, int k, const OptimizerOptions& opt = {});

/// Monte-Carlo size used for the built-in cross-checks at n <= 4.
inline constexpr int kCrossCheckSamples = 2000;

}  // namespace mgeo
