#include "mgeo/equality.hpp"

#include <algorithm>
#include <cmath>

#include "mgeo/errors.hpp"
#include "mgeo/invariants.hpp"

namespace mgeo {

const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::none: return "none";
    case PatternKind::wintgen: return "wintgen";
    case PatternKind::chen: return "chen";
    case PatternKind::casorati: return "casorati";
    case PatternKind::umbilical: return "umbilical";
    case PatternKind::shape_ricci: return "shape-ricci";
  }
  return "?";
}

double EqualityPattern::param(const std::string& name) const {
  for (const auto& [k, v] : fitted)
    if (k == name) return v;
  for (const auto& [k, v] : components)
    if (k == name) return v;
  throw ArgumentError("pattern has no parameter '" + name + "'");
}

namespace {

void check_ops(const std::vector<Matrix>& ops) {
  for (const Matrix& A : ops) {
    if (A.rows() != A.cols() || A.rows() != ops.front().rows()) {
      throw ArgumentError("shape operators must be square and of equal size");
    }
  }
}

// k x n^2 matrix whose rows are the vectorized operators.
Matrix stack(const std::vector<Matrix>& ops) {
  const Eigen::Index n = ops.front().rows();
  Matrix M(static_cast<Eigen::Index>(ops.size()), n * n);
  for (std::size_t r = 0; r < ops.size(); ++r)
    M.row(static_cast<Eigen::Index>(r)) = Eigen::Map<const Vector>(ops[r].data(), n * n).transpose();
  return M;
}

Matrix combine(const std::vector<Matrix>& ops, const Vector& xi) {
  Matrix A = Matrix::Zero(ops.front().rows(), ops.front().cols());
  for (std::size_t r = 0; r < ops.size(); ++r) A += xi(static_cast<Eigen::Index>(r)) * ops[r];
  return A;
}

double tail_norm(const Vector& s, Eigen::Index from) {
  double t = 0.0;
  for (Eigen::Index i = from; i < s.size(); ++i) t += s(i) * s(i);
  return std::sqrt(t);
}

void finalize(EqualityPattern& p) {
  p.residual = 0.0;
  for (const auto& [name, v] : p.components) {
    if (name.rfind("info_", 0) == 0) continue;
    p.residual = std::max(p.residual, v);
  }
}

// Orthonormal basis of R^k whose first column is along h (identity when h = 0).
Matrix normal_frame_along(const Vector& h) {
  const Eigen::Index k = h.size();
  const double hn = h.norm();
  if (hn == 0.0) return Matrix::Identity(k, k);
  return extend_orthonormal(h / hn, Matrix::Identity(k, k), static_cast<int>(k));
}

}  // namespace

EqualityPattern wintgen_pattern(const std::vector<Matrix>& ops) {
  EqualityPattern p;
  p.kind = PatternKind::wintgen;
  if (ops.empty()) {
    p.fitted = {{"alpha1", 0.0}, {"alpha2", 0.0}, {"alpha3", 0.0}, {"beta", 0.0}};
    return p;
  }
  check_ops(ops);
  const Eigen::Index n = ops.front().rows();
  const Eigen::Index k = static_cast<Eigen::Index>(ops.size());
  std::vector<Matrix> B;
  Vector tr(k);
  for (Eigen::Index r = 0; r < k; ++r) {
    tr(r) = ops[r].trace() / n;
    B.push_back(ops[r] - tr(r) * Matrix::Identity(n, n));
  }
  Eigen::JacobiSVD<Matrix> svd(stack(B), Eigen::ComputeFullU);
  Vector s = Vector::Zero(std::max<Eigen::Index>(2, svd.singularValues().size()));
  s.head(svd.singularValues().size()) = svd.singularValues();
  const Matrix& U = svd.matrixU();
  const Vector xi1 = U.col(0);
  const Vector xi2 = k >= 2 ? Vector(U.col(1)) : Vector::Zero(k);
  const Matrix B1 = combine(B, xi1), B2 = combine(B, xi2);

  Matrix joint(n, 2 * n);
  joint << B1, B2;
  Eigen::JacobiSVD<Matrix> js(joint);
  Vector t_rest = tr - tr.dot(xi1) * xi1 - tr.dot(xi2) * xi2;

  p.components = {{"traceless_rank", tail_norm(s, 2)},
                  {"equal_norms", std::abs(s(0) - s(1))},
                  {"anticommutator", (B1 * B2 + B2 * B1).norm()},
                  {"support_rank", tail_norm(js.singularValues(), 2)}};
  p.fitted = {{"alpha1", tr.dot(xi1)},
              {"alpha2", k >= 2 ? tr.dot(xi2) : 0.0},
              {"alpha3", t_rest.norm()},
              {"beta", (s(0) + s(1)) / (2.0 * std::sqrt(2.0))}};
  finalize(p);
  return p;
}

EqualityPattern chen_pattern(const std::vector<Matrix>& ops, const Vector& H, const Matrix& frame,
                             const std::vector<int>& tuple) {
  EqualityPattern p;
  p.kind = PatternKind::chen;
  int sum = 0;
  for (int nj : tuple) sum += nj;
  const int n = static_cast<int>(frame.rows());
  const double mu = n + static_cast<double>(tuple.size()) - sum;
  const double nu = n * H.norm() / mu;
  p.fitted = {{"nu", nu}};
  if (ops.empty()) {
    p.components = {{"off_block", 0.0}, {"block_trace", 0.0}, {"trailing_block", 0.0}};
    return p;
  }
  check_ops(ops);
  if (frame.cols() != n || ops.front().rows() != n || H.size() != static_cast<Eigen::Index>(ops.size())) {
    throw ArgumentError("chen pattern: frame, shape operators and H disagree in size");
  }
  std::vector<int> grp(n, -1);
  std::vector<std::pair<int, int>> blocks;
  int col = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    blocks.emplace_back(col, col + tuple[j]);
    for (int c = 0; c < tuple[j]; ++c) grp[col++] = static_cast<int>(j);
  }
  const int rest = n - col;

  const Matrix Nf = normal_frame_along(H);
  double off = 0.0, trace_res = 0.0, trailing = 0.0;
  for (Eigen::Index r = 0; r < Nf.cols(); ++r) {
    const Matrix A = frame.transpose() * combine(ops, Nf.col(r)) * frame;
    const double target = r == 0 ? nu : 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool same = grp[i] == grp[j] && (grp[i] >= 0 || i == j);
        if (!same) off = std::max(off, std::abs(A(i, j)));
      }
    for (const auto& [b, e] : blocks)
      trace_res = std::max(trace_res, std::abs(A.block(b, b, e - b, e - b).trace() - target));
    if (rest > 0) {
      const Matrix tail = A.bottomRightCorner(rest, rest) - target * Matrix::Identity(rest, rest);
      trailing = std::max(trailing, tail.cwiseAbs().maxCoeff());
    }
  }
  p.components = {{"off_block", off}, {"block_trace", trace_res}, {"trailing_block", trailing}};
  finalize(p);
  return p;
}

EqualityPattern casorati_pattern(const std::vector<Matrix>& ops, double u) {
  EqualityPattern p;
  p.kind = PatternKind::casorati;
  if (ops.empty()) {
    p.fitted = {{"a", 0.0}};
    return p;
  }
  check_ops(ops);
  const Eigen::Index n = ops.front().rows();
  if (!(u > 0.0)) throw ArgumentError("casorati pattern needs u > 0");
  const double kappa = (n * n - n) / u;
  Eigen::JacobiSVD<Matrix> svd(stack(ops), Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  const Matrix A = combine(ops, svd.matrixU().col(0));
  Eigen::SelfAdjointEigenSolver<Matrix> es(A);
  const Vector lam = es.eigenvalues();
  double best_res = INFINITY, best_a = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double a = (lam.sum() - lam(j) + kappa * lam(j)) / (n - 1.0 + kappa * kappa);
    double res = std::abs(lam(j) - kappa * a);
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) res = std::max(res, std::abs(lam(i) - a));
    if (res < best_res) {
      best_res = res;
      best_a = a;
    }
  }
  // The sign of the normal direction is arbitrary; report a with a >= 0 when possible.
  if (best_a < 0.0) best_a = -best_a;
  p.fitted = {{"a", best_a}, {"kappa", kappa}};
  p.components = {{"normal_rank", tail_norm(s, 1)}, {"eigenvalues", best_res}};
  finalize(p);
  return p;
}

EqualityPattern umbilical_pattern(const std::vector<Matrix>& ops) {
  EqualityPattern p;
  p.kind = PatternKind::umbilical;
  double dev = 0.0, h2 = 0.0;
  if (!ops.empty()) check_ops(ops);
  for (const Matrix& A : ops) {
    const Eigen::Index n = A.rows();
    const double m = A.trace() / n;
    h2 += m * m;
    dev = std::max(dev, (A - m * Matrix::Identity(n, n)).norm());
  }
  p.fitted = {{"H_norm", std::sqrt(h2)}};
  p.components = {{"traceless", dev}};
  finalize(p);
  return p;
}

EqualityPattern shape_ricci_pattern(const std::vector<Matrix>& ops, const Vector& H,
                                    const OmegaData& omega) {
  EqualityPattern p;
  p.kind = PatternKind::shape_ricci;
  double total = 0.0;
  for (const Matrix& A : ops) total += A.squaredNorm();
  double along = 0.0;
  if (!ops.empty() && H.norm() > 0.0) along = combine(ops, H / H.norm()).squaredNorm();
  const double k1 = omega.k - 1.0;
  p.fitted = {{"omega_k", omega.omega_k}};
  p.components = {{"normal_off_H", std::sqrt(std::max(0.0, total - along))},
                  {"ricci_spread", k1 > 0 ? (omega.sup_ricci - omega.inf_ricci) / k1 : 0.0},
                  {"info_ricci_magnitude", std::abs(omega.omega_k)}};
  finalize(p);
  return p;
}

}  // namespace mgeo
