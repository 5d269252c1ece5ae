#include "mgeo/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mgeo/errors.hpp"

namespace mgeo {

ChenLemmaResult chen_lemma_check(const Vector& a, double eps) {
  const Eigen::Index n = a.size();
  if (n < 2) throw ArgumentError("Chen's lemma needs n >= 2");
  const double s = a.sum(), sq = a.squaredNorm();
  const double scale = std::max({1.0, s * s, sq, std::abs(eps)});
  if (std::abs(s * s - (n - 1.0) * (eps + sq)) > 1e-10 * scale) {
    throw ArgumentError("Chen's lemma precondition (sum a)^2 = (n-1)(eps + sum a^2) fails");
  }
  ChenLemmaResult r;
  r.gap = 2.0 * a(0) * a(1) - eps;
  r.holds = r.gap >= -1e-10 * scale;
  // The gap is quadratic in the distance to the equality set, so a hit must be
  // at rounding level for the criterion to be tested meaningfully.
  r.equality = std::abs(r.gap) <= kChenEqualityTol * scale;
  for (Eigen::Index j = 2; j < n; ++j) {
    r.criterion_residual = std::max(r.criterion_residual, std::abs(a(j) - a(0) - a(1)));
  }
  return r;
}

DdvvResult ddvv_component_check(const std::vector<Matrix>& A) {
  if (A.empty()) throw ArgumentError("DDVV check needs at least one matrix");
  const Eigen::Index n = A.front().rows();
  for (const Matrix& M : A) {
    if (M.rows() != n || M.cols() != n) throw ArgumentError("DDVV matrices differ in size");
    if (max_abs(M - M.transpose()) > 1e-12 * std::max(1.0, max_abs(M))) {
      throw ArgumentError("DDVV matrices must be symmetric");
    }
  }
  DdvvResult r;
  double dev = 0.0;
  for (const Matrix& M : A)
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) {
        r.lhs += M(i, j) * M(i, j);
        dev += std::pow(M(i, i) - M(j, j), 2);
      }
  r.deviation = dev / (2.0 * n);
  double sq = 0.0, raw = 0.0;
  for (std::size_t t = 0; t < A.size(); ++t)
    for (std::size_t s = t + 1; s < A.size(); ++s) {
      const Matrix c = A[t] * A[s] - A[s] * A[t];
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
          sq += c(i, j) * c(i, j);
          raw += c(i, j);
        }
    }
  r.commutator = std::sqrt(sq);
  r.rhs = r.commutator - r.deviation;
  r.slack = r.lhs - r.rhs;
  r.rhs_unsquared = std::copysign(std::sqrt(std::abs(raw)), raw) - r.deviation;
  r.slack_unsquared = r.lhs - r.rhs_unsquared;
  return r;
}

ChenLemmaSuite run_chen_lemma_suite(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 8);
  ChenLemmaSuite out;
  out.samples = samples;
  for (std::int64_t k = 0; k < samples; ++k) {
    const int n = dim(rng);
    Vector a(n);
    if (k % 10 == 0) {
      const double s = N(rng);
      a(0) = N(rng);
      a(1) = s - a(0);
      for (int j = 2; j < n; ++j) a(j) = s;
    } else {
      for (int j = 0; j < n; ++j) a(j) = N(rng);
    }
    const double sum = a.sum(), sq = a.squaredNorm();
    const double eps = sum * sum / (n - 1.0) - sq;
    const ChenLemmaResult r = chen_lemma_check(a, eps);
    const double scale = std::max({1.0, sum * sum, sq, std::abs(eps)});
    out.worst_gap = k == 0 ? r.gap / scale : std::min(out.worst_gap, r.gap / scale);
    if (!r.holds) ++out.violations;
    if (r.equality) {
      ++out.equality_hits;
      out.worst_criterion_residual = std::max(out.worst_criterion_residual, r.criterion_residual);
      if (r.criterion_residual > 1e-8 * std::sqrt(scale)) ++out.equality_criterion_failures;
    }
  }
  return out;
}

DdvvSuite run_ddvv_suite(std::int64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> N(0.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 5);
  std::uniform_int_distribution<int> normals(1, 4);
  DdvvSuite out;
  out.samples = samples;
  bool first = true;
  for (std::int64_t k = 0; k < samples; ++k) {
    const int n = dim(rng), r = normals(rng);
    std::vector<Matrix> A;
    for (int t = 0; t < r; ++t) {
      Matrix M(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) M(i, j) = M(j, i) = N(rng);
      A.push_back(M);
    }
    const DdvvResult res = ddvv_component_check(A);
    if (first) {
      out.worst_slack = res.slack;
      out.worst_unsquared_slack = res.slack_unsquared;
      first = false;
    }
    out.worst_slack = std::min(out.worst_slack, res.slack);
    out.worst_unsquared_slack = std::min(out.worst_unsquared_slack, res.slack_unsquared);
    if (res.slack < -1e-9) ++out.violations;
    if (res.slack_unsquared < -1e-9) ++out.unsquared_violations;
  }
  Matrix A1(2, 2), A2(2, 2);
  A1 << 1, 0, 0, -1;
  A2 << 0, 1, 1, 0;
  out.reference_slack = ddvv_component_check({A1, A2}).slack;
  return out;
}

}  // namespace mgeo
