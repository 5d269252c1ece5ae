#pragma once

// Standalone algebraic checks: Chen's lemma and the component form of the DDVV
// inequality, with randomized suites.

#include <cstdint>
#include <vector>

#include "mgeo/metallic.hpp"

namespace mgeo {

inline constexpr double kChenEqualityTol = 1e-14;

struct ChenLemmaResult {
  bool holds = false;              ///< 2 a1 a2 >= eps - 1e-10
  double gap = 0.0;                ///< 2 a1 a2 - eps
  bool equality = false;           ///< |gap| <= kChenEqualityTol (scaled)
  double criterion_residual = 0.0; ///< max_j>=3 |a_j - (a1 + a2)|
};

/// Throws ArgumentError for n < 2 or when (sum a)^2 != (n-1)(eps + sum a^2).
ChenLemmaResult chen_lemma_check(const Vector& a, double eps);

struct DdvvResult {
  double lhs = 0.0;          ///< sum_r sum_{i<j} (h^r_ij)^2
  double commutator = 0.0;   ///< sqrt(sum_{t<s} sum_{i<j} ([A_t, A_s]_ij)^2)
  double deviation = 0.0;    ///< (1/2n) sum_r sum_{i<j} (h^r_ii - h^r_jj)^2
  double rhs = 0.0;          ///< commutator - deviation
  double slack = 0.0;        ///< lhs - rhs
  /// The same with the bracket unsquared: sign(S) sqrt(|S|), S = sum of brackets.
  double rhs_unsquared = 0.0;
  double slack_unsquared = 0.0;
};

/// Throws ArgumentError for an empty list, mismatched sizes or non-symmetric input.
DdvvResult ddvv_component_check(const std::vector<Matrix>& shape_ops);

struct ChenLemmaSuite {
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  double worst_gap = 0.0;          ///< min over samples of gap / scale
  std::int64_t equality_hits = 0;
  std::int64_t equality_criterion_failures = 0;
  double worst_criterion_residual = 0.0;
};

/// Random vectors with eps from the constraint; every 10th sample is built to
/// satisfy a1 + a2 = a3 = ... = an.
ChenLemmaSuite run_chen_lemma_suite(std::int64_t samples, std::uint64_t seed);

struct DdvvSuite {
  std::int64_t samples = 0;
  std::int64_t violations = 0;  ///< slack < -1e-9 (squared reading)
  double worst_slack = 0.0;
  std::int64_t unsquared_violations = 0;
  double worst_unsquared_slack = 0.0;
  double reference_slack = 0.0;  ///< the n = 2 equality configuration
};

/// n in [2, 5], 1 to 4 normals, entries standard normal.
DdvvSuite run_ddvv_suite(std::int64_t samples, std::uint64_t seed);

}  // namespace mgeo
