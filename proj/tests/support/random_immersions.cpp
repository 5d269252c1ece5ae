#include "random_immersions.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

namespace mgeo::testing {

const char* to_string(SlantKind k) {
  switch (k) {
    case SlantKind::invariant: return "invariant";
    case SlantKind::anti_invariant: return "anti-invariant";
    case SlantKind::proper_slant: return "proper-slant";
    case SlantKind::bislant: return "bi-slant";
  }
  return "?";
}

const char* to_string(AmbientKind k) {
  switch (k) {
    case AmbientKind::flat_flat: return "flat x flat";
    case AmbientKind::sphere_flat: return "sphere x flat";
    case AmbientKind::flat_sphere: return "flat x sphere";
    case AmbientKind::sphere_sphere: return "sphere x sphere";
  }
  return "?";
}

Matrix haar_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = N(rng);
  Eigen::HouseholderQR<Matrix> qr(A);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  return Q;
}

Matrix random_symmetric(int n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> N(0.0, scale);
  Matrix A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) A(i, j) = A(j, i) = N(rng);
  return A;
}

std::vector<std::vector<int>> admissible_tuples(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min_part, int left) {
    if (!cur.empty()) out.push_back(cur);
    for (int p = min_part; p <= std::min(n - 1, left); ++p) {
      cur.push_back(p);
      rec(p, left - p);
      cur.pop_back();
    }
  };
  rec(2, n);
  // Non-increasing order is the conventional way to write them.
  for (auto& t : out) std::sort(t.rbegin(), t.rend());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "(%.17g)", v);
  return buf;
}

struct FactorSetup {
  bool sphere = false;
  double c = 0.0;
  double radius = 0.0;
  int m = 0;
  Vector base;     ///< block of the base point
  Matrix tangent;  ///< block x m, orthonormal tangent vectors at the base point
};

FactorSetup make_factor(bool sphere, int m, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 2);
  FactorSetup f;
  f.sphere = sphere;
  f.m = m;
  if (sphere) {
    const double cs[] = {1.0, 4.0, 0.25};
    f.c = cs[pick(rng)];
    f.radius = 1.0 / std::sqrt(f.c);
    const Matrix Q = haar_orthogonal(m + 1, rng);
    f.base = f.radius * Q.col(m);
    f.tangent = Q.leftCols(m);
  } else {
    f.base = Vector(m);
    for (int i = 0; i < m; ++i) f.base(i) = U(rng);
    f.tangent = haar_orthogonal(m, rng);
  }
  return f;
}

}  // namespace

RandomImmersion random_immersion(SlantKind kind, AmbientKind ambient, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pq(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  std::normal_distribution<double> N(0.0, 0.4);

  RandomImmersion out;
  out.kind = kind;
  out.ambient = ambient;
  const bool s1 = ambient == AmbientKind::sphere_flat || ambient == AmbientKind::sphere_sphere;
  const bool s2 = ambient == AmbientKind::flat_sphere || ambient == AmbientKind::sphere_sphere;
  const int m = n + coin(rng);
  const FactorSetup f1 = make_factor(s1, m, rng);
  const FactorSetup f2 = make_factor(s2, m, rng);

  CaseConfig& cfg = out.config;
  cfg.space.m1 = m;
  cfg.space.m2 = m;
  cfg.space.c1 = f1.c;
  cfg.space.c2 = f2.c;
  cfg.space.p = pq(rng);
  cfg.space.q = pq(rng);
  cfg.space.branch = coin(rng) ? Branch::first : Branch::second;
  cfg.space.factor1 = s1 ? FactorRealization::sphere(f1.radius) : FactorRealization::flat();
  cfg.space.factor2 = s2 ? FactorRealization::sphere(f2.radius) : FactorRealization::flat();
  cfg.n = n;

  const MetallicParams mp = metallic_constants(cfg.space.p, cfg.space.q);
  const double l1 = cfg.space.branch == Branch::first ? mp.sigma : mp.p - mp.sigma;
  const double l2 = mp.p - l1;
  const double t_anti = std::atan(std::sqrt(-l1 / l2));
  const auto theta_of = [&](double t) {
    const double c = std::cos(t), s = std::sin(t);
    const double lam = l1 * c * c + l2 * s * s;
    const double norm_sq = l1 * l1 * c * c + l2 * l2 * s * s;
    return std::acos(std::min(1.0, std::abs(lam) / std::sqrt(norm_sq)));
  };
  // A mixing angle away from 0, pi/2 and the anti-invariant angle.
  const auto proper_t = [&] {
    for (;;) {
      const double t = 0.15 + U(rng) * (std::numbers::pi / 2 - 0.3);
      if (std::abs(t - t_anti) > 0.1) return t;
    }
  };

  // Tangent vectors at the base point, as (factor-1 part, factor-2 part).
  std::vector<std::pair<Vector, Vector>> X;
  int next1 = 0, next2 = 0;
  const auto mixed = [&](double t) {
    const int k = std::max(next1, next2);
    next1 = next2 = k + 1;
    X.emplace_back(std::cos(t) * f1.tangent.col(k), std::sin(t) * f2.tangent.col(k));
  };
  const auto pure1 = [&] {
    X.emplace_back(f1.tangent.col(next1++), Vector::Zero(f2.base.size()));
  };
  const auto pure2 = [&] {
    X.emplace_back(Vector::Zero(f1.base.size()), f2.tangent.col(next2++));
  };

  switch (kind) {
    case SlantKind::invariant: {
      std::uniform_int_distribution<int> split(0, n);
      const int n1 = split(rng);
      for (int i = 0; i < n1; ++i) pure1();
      for (int i = n1; i < n; ++i) pure2();
      out.d1 = n;
      break;
    }
    case SlantKind::anti_invariant:
      for (int i = 0; i < n; ++i) mixed(t_anti);
      out.expected_theta1 = out.expected_theta2 = std::numbers::pi / 2;
      out.d1 = n;
      break;
    case SlantKind::proper_slant: {
      const double t = proper_t();
      for (int i = 0; i < n; ++i) mixed(t);
      out.expected_theta1 = out.expected_theta2 = theta_of(t);
      out.d1 = n;
      break;
    }
    case SlantKind::bislant: {
      std::uniform_int_distribution<int> split(1, n - 1);
      out.d1 = split(rng);
      out.d2 = n - out.d1;
      // D1 invariant in factor 1 or proper slant; D2 proper slant or anti-invariant.
      const bool d1_invariant = coin(rng);
      const double t1 = d1_invariant ? 0.0 : proper_t();
      double t2 = coin(rng) ? t_anti : proper_t();
      for (int i = 0; i < out.d1; ++i) d1_invariant ? pure1() : mixed(t1);
      for (int i = 0; i < out.d2; ++i) mixed(t2);
      out.expected_theta1 = d1_invariant ? 0.0 : theta_of(t1);
      out.expected_theta2 = theta_of(t2);
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> v(n, "0");
        v[i] = "1";
        (i < out.d1 ? cfg.d1 : cfg.d2).push_back(v);
      }
      break;
    }
  }

  // Coordinates: base + linear + random quadratic terms; sphere blocks are
  // normalized back onto their sphere.
  const auto block_exprs = [&](const FactorSetup& f, int which) {
    const int B = static_cast<int>(f.base.size());
    std::vector<std::string> lin(B);
    for (int r = 0; r < B; ++r) {
      std::string e = fmt(f.base(r));
      for (int i = 0; i < n; ++i) {
        const double c = which == 0 ? X[i].first(r) : X[i].second(r);
        if (c != 0.0) e += " + " + fmt(c) + "*u" + std::to_string(i + 1);
      }
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          e += " + " + fmt(N(rng)) + "*u" + std::to_string(i + 1) + "*u" + std::to_string(j + 1);
      lin[r] = "(" + e + ")";
    }
    if (!f.sphere) return lin;
    std::string norm = "sqrt(";
    for (int r = 0; r < B; ++r) norm += (r ? " + " : "") + lin[r] + "*" + lin[r];
    norm += ")";
    std::vector<std::string> out_exprs;
    for (int r = 0; r < B; ++r) out_exprs.push_back(fmt(f.radius) + "*" + lin[r] + "/" + norm);
    return out_exprs;
  };
  for (auto& e : block_exprs(f1, 0)) cfg.coords.push_back(e);
  for (auto& e : block_exprs(f2, 1)) cfg.coords.push_back(e);

  cfg.name = std::string(to_string(kind)) + " in " + to_string(ambient);
  cfg.points = {std::vector<double>(n, 0.0)};
  if (n < 2) return out;  // no theorem applies to curves
  cfg.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  cfg.tuples = admissible_tuples(n);
  for (int k = 2; k <= n; ++k) cfg.k_values.push_back(k);
  cfg.u_values = {1.0, n * (n - 1.0) + 1.0};
  return out;
}

}  // namespace mgeo::testing
