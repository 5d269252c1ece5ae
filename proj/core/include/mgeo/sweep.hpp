#pragma once

// Runs a case over its parameter grid: per-point invariants, theorem verdicts
// and the derivation check. Points are processed concurrently; results are
// ordered by point index.

#include <optional>
#include <string>
#include <vector>

#include "mgeo/case.hpp"

namespace mgeo {

struct SweepMode {
  bool verify = false;
  bool derivation = false;
};

struct PointResult {
  std::size_t index = 0;
  std::vector<double> u;
  std::string error;       ///< non-empty when the point was skipped
  std::string error_kind;  ///< "off-manifold", "degenerate-immersion" or "evaluation"
  CurvatureInvariants invariants;
  double metric_cond = 0.0;
  SlantData slant;
  TraceData traces;
  std::vector<InequalityResult> results;
  std::optional<DerivationCheck> derivation;

  bool ok() const { return error.empty(); }
};

/// Compiled case: the immersion and the distribution expressions.
struct CompiledCase {
  CaseConfig config;
  ImmersionSpec spec;
  std::vector<std::vector<Expr>> d1;
  std::vector<std::vector<Expr>> d2;
};

/// Validates and parses. Throws ArgumentError, ParseError, RealizationError or
/// DomainError for a bad configuration.
CompiledCase compile_case(const CaseConfig& cfg);

/// Evaluates the configured distributions at a point, in tangent-frame coordinates.
std::pair<std::optional<Matrix>, std::optional<Matrix>> distributions_at(
    const CompiledCase& c, const SubmanifoldPointData& pd);

/// Point-local failures (off-manifold, degenerate metric, singular expression)
/// are recorded in the result. Distributions that are not orthogonal or do not
/// span TN throw ClassificationError naming the point.
PointResult run_point(const CompiledCase& c, const std::vector<double>& u, std::size_t index,
                      SweepMode mode, int optimizer_threads = 1);

/// Threads: points are distributed over `threads` workers.
std::vector<PointResult> run_sweep(const CompiledCase& c, SweepMode mode, int threads = 1);

}  // namespace mgeo
