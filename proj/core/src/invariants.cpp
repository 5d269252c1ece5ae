#include "mgeo/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "mgeo/errors.hpp"

namespace mgeo {

Tensor4 gauss_tensor(const Tensor4& ambient, const std::vector<Matrix>& shape_ops) {
  const int k = static_cast<int>(shape_ops.size());
  const int n = ambient.dim() - k;
  Tensor4 R(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double v = ambient(a, b, c, d);
          for (const Matrix& A : shape_ops) v += A(a, d) * A(b, c) - A(a, c) * A(b, d);
          R(a, b, c, d) = v;
        }
  return R;
}

PointGeometry make_geometry(Tensor4 ambient, std::vector<Matrix> shape_ops) {
  PointGeometry g;
  g.k = static_cast<int>(shape_ops.size());
  g.n = ambient.dim() - g.k;
  if (g.n < 1) throw ArgumentError("geometry needs a positive tangent dimension");
  for (const Matrix& A : shape_ops) {
    if (A.rows() != g.n || A.cols() != g.n) {
      throw ArgumentError("shape operator has wrong size for n=" + std::to_string(g.n));
    }
    if (max_abs(A - A.transpose()) > 1e-12 * std::max(1.0, max_abs(A))) {
      throw ArgumentError("shape operator is not symmetric");
    }
  }
  g.R = gauss_tensor(ambient, shape_ops);
  g.Rperp = normal_curvature(ambient, shape_ops);
  g.H = Vector::Zero(g.k);
  for (int r = 0; r < g.k; ++r) g.H(r) = shape_ops[r].trace() / g.n;
  g.H_sq = g.H.squaredNorm();
  g.ambient = std::move(ambient);
  g.shape_ops = std::move(shape_ops);
  return g;
}

PointGeometry geometry_at(const ImmersionSpec& spec, const SubmanifoldPointData& pd, Sign sign) {
  return make_geometry(ambient_tensor(spec.space, pd.frame(), sign), pd.shape_ops);
}

namespace {

// Mat(a + n d, b + n c) = R_abcd, so that R(X,Y,Y,X) = vec(XX^T)^T Mat vec(YY^T).
Matrix curvature_operator(const Tensor4& R) {
  const int n = R.dim();
  Matrix M(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) M(a + n * d, b + n * c) = R(a, b, c, d);
  return M;
}

Eigen::Map<const Vector> vec(const Matrix& m) { return {m.data(), m.size()}; }

double quartic(const Matrix& op, const Matrix& P1, const Matrix& P2) {
  return vec(P1).dot(op * vec(P2));
}

}  // namespace

double sectional_curvature(const PointGeometry& g, const Vector& X, const Vector& Y) {
  const double area = X.squaredNorm() * Y.squaredNorm() - std::pow(X.dot(Y), 2);
  if (area <= 1e-14 * X.squaredNorm() * Y.squaredNorm()) {
    throw ArgumentError("sectional curvature needs linearly independent vectors");
  }
  double v = 0.0;
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) v += g.R(a, b, c, d) * X(a) * Y(b) * Y(c) * X(d);
  return v / area;
}

double scalar_curvature(const PointGeometry& g) {
  double tau = 0.0;
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b) tau += g.R(a, b, b, a);
  return tau;
}

double normalized_scalar_curvature(const PointGeometry& g) {
  if (g.n < 2) return 0.0;
  return 2.0 * scalar_curvature(g) / (g.n * (g.n - 1.0));
}

double normal_scalar_curvature(const NormalCurvature& Rp) {
  const int n = Rp.n(), k = Rp.codim();
  if (n < 2 || k < 2) return 0.0;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = 0; t < k; ++t)
        for (int s = t + 1; s < k; ++s) sum += Rp(i, j, t, s) * Rp(i, j, t, s);
  return 2.0 / (n * (n - 1.0)) * std::sqrt(sum);
}

double casorati(const std::vector<Matrix>& shape_ops) {
  if (shape_ops.empty()) return 0.0;
  double s = 0.0;
  for (const Matrix& A : shape_ops) s += A.squaredNorm();
  return s / static_cast<double>(shape_ops.front().rows());
}

CurvatureInvariants curvature_invariants(const PointGeometry& g) {
  CurvatureInvariants c;
  c.tau = scalar_curvature(g);
  c.rho = normalized_scalar_curvature(g);
  c.rho_perp = normal_scalar_curvature(g.Rperp);
  c.H_sq = g.H_sq;
  c.C = g.k == 0 ? 0.0 : casorati(g.shape_ops);
  return c;
}

double casorati_hyperplane(const std::vector<Matrix>& shape_ops, const Vector& w) {
  const double nw = w.norm();
  if (!(nw > 0.0)) throw ArgumentError("hyperplane conormal is zero");
  if (shape_ops.empty()) return 0.0;
  const Eigen::Index n = shape_ops.front().rows();
  if (n < 2) throw ArgumentError("hyperplanes need n >= 2");
  if (w.size() != n) throw ArgumentError("conormal has wrong dimension");
  const Vector e = w / nw;
  double s = 0.0;
  for (const Matrix& A : shape_ops) {
    const Vector Ae = A * e;
    const double q = e.dot(Ae);
    s += A.squaredNorm() - 2.0 * Ae.squaredNorm() + q * q;
  }
  return s / (n - 1.0);
}

double casorati_a(int n, double u) {
  return (n - 1.0) * (u + n) * (n * (n - 1.0) - u) / (n * u);
}

bool CasoratiData::sup_branch() const { return u > n * (n - 1.0); }

namespace {

std::vector<Vector> conormal_samples(int n) {
  std::vector<Vector> out;
  if (n == 2) {
    constexpr int kCount = 3600;
    for (int i = 0; i < kCount; ++i) {
      const double t = std::numbers::pi * i / kCount;
      Vector w(2);
      w << std::cos(t), std::sin(t);
      out.push_back(w);
    }
  } else if (n == 3) {
    constexpr int kCount = 20000;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < kCount; ++i) {
      const double z = 1.0 - (i + 0.5) / kCount;  // upper hemisphere suffices (w ~ -w)
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      Vector w(3);
      w << r * std::cos(golden * i), r * std::sin(golden * i), z;
      out.push_back(w);
    }
  } else if (n == 4) {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> N(0.0, 1.0);
    for (int i = 0; i < 40000; ++i) {
      Vector w(4);
      for (int j = 0; j < 4; ++j) w(j) = N(rng);
      out.push_back(w.normalized());
    }
  }
  return out;
}

Matrix permutation_frame(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  Matrix Q = Matrix::Zero(n, n);
  for (int c = 0; c < n; ++c) Q(order[c], c) = 1.0;
  return Q;
}

}  // namespace

CasoratiData delta_casorati(const std::vector<Matrix>& shape_ops, double u,
                            const OptimizerOptions& opt) {
  if (shape_ops.empty()) throw ArgumentError("Casorati curvature needs at least one normal");
  const int n = static_cast<int>(shape_ops.front().rows());
  if (n < 2) throw ArgumentError("delta_C needs n >= 2");
  if (!(u > 0.0) || u == n * (n - 1.0)) {
    throw ArgumentError("delta_C needs u > 0 and u != n(n-1) = " + std::to_string(n * (n - 1)));
  }
  CasoratiData d;
  d.n = n;
  d.u = u;
  d.a_u = casorati_a(n, u);
  d.C = casorati(shape_ops);

  FrameObjective obj;
  obj.n = n;
  obj.value = [&shape_ops](const Matrix& Q) { return casorati_hyperplane(shape_ops, Q.col(0)); };
  for (int j = 1; j < n; ++j) obj.planes.emplace_back(0, j);
  for (int i = 0; i < n; ++i) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::swap(order[0], order[i]);
    obj.seeds.push_back(permutation_frame(order));
  }
  d.inf_cert = minimize_frames(obj, opt);
  d.sup_cert = maximize_frames(obj, opt);
  d.C_W_inf = d.inf_cert.value;
  d.C_W_sup = d.sup_cert.value;
  d.argmin_W = d.inf_cert.frame.col(0);
  d.argmax_W = d.sup_cert.frame.col(0);
  d.delta_C = u * d.C + d.a_u * d.C_W_inf;
  d.delta_C_hat = u * d.C + d.a_u * d.C_W_sup;

  if (n <= 4) {
    double lo = INFINITY, hi = -INFINITY;
    for (const Vector& w : conormal_samples(n)) {
      const double v = casorati_hyperplane(shape_ops, w);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    d.grid_inf = lo;
    d.grid_sup = hi;
  }
  return d;
}

double partial_scalar_curvature(const PointGeometry& g, const Matrix& L) {
  double tau = 0.0;
  for (Eigen::Index a = 0; a < L.cols(); ++a)
    for (Eigen::Index b = a + 1; b < L.cols(); ++b) {
      tau += sectional_curvature(g, L.col(a), L.col(b));
    }
  return tau;
}

double partial_ricci(const PointGeometry& g, const Matrix& L) {
  double r = 0.0;
  for (Eigen::Index j = 1; j < L.cols(); ++j) r += sectional_curvature(g, L.col(0), L.col(j));
  return r;
}

void check_chen_tuple(int n, const std::vector<int>& tuple) {
  if (tuple.empty()) throw ArgumentError("Chen tuple is empty");
  int sum = 0;
  for (int nj : tuple) {
    if (nj < 2 || nj > n - 1) {
      throw ArgumentError("Chen tuple entries must lie in [2, n-1] = [2, " +
                          std::to_string(n - 1) + "]");
    }
    sum += nj;
  }
  if (sum > n) {
    throw ArgumentError("Chen tuple entries sum to " + std::to_string(sum) + " > n = " +
                        std::to_string(n));
  }
}

ChenConstants chen_constants(int n, const std::vector<int>& tuple) {
  const int k = static_cast<int>(tuple.size());
  double sum = 0.0, sum_sq = 0.0, sum_m1 = 0.0;
  for (int nj : tuple) {
    sum += nj;
    sum_sq += nj * (nj - 1.0);
    sum_m1 += nj - 1.0;
  }
  ChenConstants c;
  c.b = 0.5 * (n * (n - 1.0) - sum_sq);
  c.c = n * n * (n + k - 1.0 - sum) / (2.0 * (n + k - sum));
  c.d = (n - 1.0) - sum_m1;
  return c;
}

namespace {

// Group index of each frame column: tuple blocks in order, then -1 for the rest.
std::vector<int> column_groups(int n, const std::vector<int>& tuple) {
  std::vector<int> grp(n, -1);
  int col = 0;
  for (std::size_t j = 0; j < tuple.size(); ++j)
    for (int c = 0; c < tuple[j]; ++c) grp[col++] = static_cast<int>(j);
  return grp;
}

// Assignments of coordinate vectors to the tuple blocks (each block as an
// increasing index set), capped.
void coordinate_seeds(int n, const std::vector<int>& tuple, std::size_t cap,
                      std::vector<Matrix>& out) {
  std::vector<int> order;
  std::vector<bool> used(n, false);
  const std::function<void(std::size_t, int, int)> rec = [&](std::size_t block, int filled,
                                                               int min_idx) {
    if (out.size() >= cap) return;
    if (block == tuple.size()) {
      std::vector<int> full = order;
      for (int i = 0; i < n; ++i)
        if (!used[i]) full.push_back(i);
      out.push_back(permutation_frame(full));
      return;
    }
    if (filled == tuple[block]) {
      rec(block + 1, 0, 0);
      return;
    }
    for (int i = min_idx; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      order.push_back(i);
      rec(block, filled + 1, i + 1);
      order.pop_back();
      used[i] = false;
    }
  };
  rec(0, 0, 0);
}

}  // namespace

ChenDeltaData chen_delta(const PointGeometry& g, const std::vector<int>& tuple,
                         const OptimizerOptions& opt) {
  const int n = g.n;
  check_chen_tuple(n, tuple);
  ChenDeltaData d;
  d.tuple = tuple;
  d.tau = scalar_curvature(g);
  d.constants = chen_constants(n, tuple);

  const Matrix op = curvature_operator(g.R);
  std::vector<std::pair<int, int>> blocks;  // [begin, end) per tuple entry
  int col = 0;
  for (int nj : tuple) {
    blocks.emplace_back(col, col + nj);
    col += nj;
  }
  FrameObjective obj;
  obj.n = n;
  obj.value = [op, blocks](const Matrix& Q) {
    double s = 0.0;
    for (const auto& [b, e] : blocks) {
      const Matrix L = Q.middleCols(b, e - b);
      const Matrix P = L * L.transpose();
      s += 0.5 * quartic(op, P, P);
    }
    return s;
  };
  const std::vector<int> grp = column_groups(n, tuple);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (grp[i] != grp[j]) obj.planes.emplace_back(i, j);
  coordinate_seeds(n, tuple, 256, obj.seeds);

  d.inf_cert = minimize_frames(obj, opt);
  d.sup_cert = maximize_frames(obj, opt);
  d.inf_sum = d.inf_cert.value;
  d.sup_sum = d.sup_cert.value;
  d.delta = d.tau - d.inf_sum;
  d.delta_hat = d.tau - d.sup_sum;

  if (n <= 4) {
    double lo = INFINITY, hi = -INFINITY;
    for (int s = 0; s < kCrossCheckSamples; ++s) {
      const double v = obj.value(random_orthogonal(n, opt.seed ^ 0xc4e5ULL, s));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    d.mc_inf = lo;
    d.mc_sup = hi;
  }
  return d;
}

OmegaData omega_k(const PointGeometry& g, int k, const OptimizerOptions& opt) {
  const int n = g.n;
  if (k < 2 || k > n) {
    throw ArgumentError("Omega_k needs 2 <= k <= n = " + std::to_string(n) + " (got k=" +
                        std::to_string(k) + ")");
  }
  const Matrix op = curvature_operator(g.R);
  FrameObjective obj;
  obj.n = n;
  obj.value = [op, k](const Matrix& Q) {
    const Matrix L = Q.leftCols(k);
    const Matrix XX = Q.col(0) * Q.col(0).transpose();
    return quartic(op, XX, L * L.transpose() - XX);
  };
  for (int j = 1; j < k; ++j) obj.planes.emplace_back(0, j);
  for (int a = 0; a < k; ++a)
    for (int b = k; b < n; ++b) obj.planes.emplace_back(a, b);
  for (int x = 0; x < n && obj.seeds.size() < 256; ++x) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != x) rest.push_back(i);
    // Every (k-1)-subset of the remaining coordinates completes L.
    std::vector<bool> pick(rest.size(), false);
    std::fill(pick.begin(), pick.begin() + (k - 1), true);
    do {
      std::vector<int> order{x};
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (pick[i]) order.push_back(rest[i]);
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (!pick[i]) order.push_back(rest[i]);
      obj.seeds.push_back(permutation_frame(order));
    } while (std::prev_permutation(pick.begin(), pick.end()) && obj.seeds.size() < 256);
  }

  OmegaData d;
  d.k = k;
  d.inf_cert = minimize_frames(obj, opt);
  d.sup_cert = maximize_frames(obj, opt);
  d.inf_ricci = d.inf_cert.value;
  d.sup_ricci = d.sup_cert.value;
  d.omega_k = d.inf_ricci / (k - 1.0);
  if (n <= 4) {
    double lo = INFINITY;
    for (int s = 0; s < kCrossCheckSamples; ++s) {
      lo = std::min(lo, obj.value(random_orthogonal(n, opt.seed ^ 0x0e6aULL, s)));
    }
    d.mc_inf = lo;
  }
  return d;
}

}  // namespace mgeo
