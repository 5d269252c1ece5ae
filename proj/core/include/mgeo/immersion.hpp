#pragma once

// Immersions u -> f(u) into the realization of a product space form, and the
// per-point submanifold data derived from their 2-jets.

#include <string>
#include <utility>
#include <vector>

#include "mgeo/ambient.hpp"
#include "mgeo/expression.hpp"

namespace mgeo {

inline constexpr double kMaxMetricCondition = 1e8;

struct ImmersionSpec {
  ProductSpaceForm space;
  int n = 0;
  std::vector<Expr> coords;  ///< one per realization coordinate
  std::vector<std::string> constant_names;
  std::vector<double> constant_values;
};

/// Parses the coordinate expressions (coordinate i is reported as line i+1 in a
/// ParseError). Throws ArgumentError for a wrong coordinate count, n outside
/// [1, min(dim M, 8)], or constant names clashing with variables or functions.
ImmersionSpec make_immersion(const ProductSpaceForm& space, int n,
                             const std::vector<std::string>& coords,
                             const std::vector<std::pair<std::string, double>>& constants = {});

struct ImmersionJet {
  Vector value;  ///< f(u)
  Matrix d1;     ///< E x n, column i = df/du_i
  Matrix d2;     ///< E x n^2, column i*n+j = d2f/du_i du_j

  Vector second(int i, int j) const { return d2.col(i * d1.cols() + j); }
};

ImmersionJet jet2(const ImmersionSpec& spec, const std::vector<double>& u);

struct SubmanifoldPointData {
  std::vector<double> u;
  AmbientPoint x;
  int n = 0;
  int m = 0;                      ///< dim M
  Matrix tangent_frame;           ///< E x n, orthonormal, tangent to N
  Matrix normal_frame;            ///< E x (m-n), orthonormal, normal to N inside TM
  Matrix metric;                  ///< induced metric in the coordinates u
  double metric_cond = 1.0;
  Matrix coord_to_frame;          ///< C with tangent_frame = d1 * C
  std::vector<Matrix> shape_ops;  ///< (A_r)_ij = h^r_ij, r over the normal frame
  Vector H;                       ///< mean curvature components along the normal frame
  double H_sq = 0.0;

  int codim() const { return m - n; }
  Matrix frame() const;  ///< [tangent_frame | normal_frame]
};

/// Throws OffManifoldError if f(u) or its coordinate derivatives leave the
/// realized manifold, DegenerateImmersionError if the induced metric is singular
/// or has condition number above 1e8, EvaluationError at expression singularities.
SubmanifoldPointData point_data(const ImmersionSpec& spec, const std::vector<double>& u);

/// R_perp(i, j, t, s) = g(R_perp(e_i, e_j) e_t, e_s).
class NormalCurvature {
 public:
  NormalCurvature() = default;
  NormalCurvature(int n, int k) : n_(n), k_(k), data_(static_cast<std::size_t>(n) * n * k * k) {}

  int n() const { return n_; }
  int codim() const { return k_; }
  double& operator()(int i, int j, int t, int s) { return data_[idx(i, j, t, s)]; }
  double operator()(int i, int j, int t, int s) const { return data_[idx(i, j, t, s)]; }

 private:
  std::size_t idx(int i, int j, int t, int s) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * k_ + t) * k_ + s;
  }
  int n_ = 0;
  int k_ = 0;
  std::vector<double> data_;
};

/// Ricci equation: R_perp(i,j,t,s) = R~(e_i, e_j, nu_t, nu_s) + e_j . [A_t, A_s] e_i.
/// `ambient` is the ambient tensor on [tangent | normal].
NormalCurvature normal_curvature(const Tensor4& ambient, const std::vector<Matrix>& shape_ops);
NormalCurvature normal_curvature(const ImmersionSpec& spec, const std::vector<double>& u);

/// Blocks of phi in the frame [tangent | normal]: phi = [[T, t], [N, nmat]].
struct PhiDecomposition {
  Matrix T;
  Matrix N;
  Matrix t;
  Matrix nmat;
  double reassembly_residual = 0.0;  ///< against phi from the adapted frame
  double symmetry_residual = 0.0;    ///< max |T - T^T|

  Matrix full() const;
};

PhiDecomposition phi_decompose(const ImmersionSpec& spec, const SubmanifoldPointData& pd);
PhiDecomposition phi_decompose(const ImmersionSpec& spec, const std::vector<double>& u);

}  // namespace mgeo
