#pragma once

// Derivative-free minimization of functions of an orthonormal frame Q in O(n)
// by cyclic Givens rotations. Every objective used by the library is a
// homogeneous quartic in the frame columns, so along a single rotation angle t
// it is a trigonometric polynomial with frequencies 0, 2 and 4. The line search
// fits that polynomial from 8 samples and minimizes the fit (angle grid, then
// golden section); a step is kept only if the true objective decreases.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mgeo/metallic.hpp"

namespace mgeo {

struct OptimizerOptions {
  int restarts = 64;
  std::uint64_t seed = 42;
  int max_sweeps = 200;
  int threads = 1;
  double agree_tol = 1e-8;
};

struct FrameObjective {
  int n = 0;
  std::function<double(const Matrix&)> value;
  /// Column pairs (i, j), i < j, whose rotations can change the value.
  std::vector<std::pair<int, int>> planes;
  /// Deterministic starting frames run before the random restarts.
  std::vector<Matrix> seeds;
};

struct OptimumCertificate {
  double value = 0.0;
  Matrix frame;
  int starts = 0;    ///< seeds + random restarts
  int agreeing = 0;  ///< starts whose local optimum is within agree_tol of the best
};

OptimumCertificate minimize_frames(const FrameObjective& obj, const OptimizerOptions& opt);
/// Same search on -value; the certificate reports the maximum.
OptimumCertificate maximize_frames(const FrameObjective& obj, const OptimizerOptions& opt);

/// Local descent from a single start; exposed for tests and benchmarks.
double descend(const FrameObjective& obj, Matrix& Q, int max_sweeps);

/// Random orthogonal matrix for restart `index` (independent of the restart count).
Matrix random_orthogonal(int n, std::uint64_t seed, std::uint64_t index);

/// Minimum over [0, 2pi) of a0 + a1 cos s + b1 sin s + a2 cos 2s + b2 sin 2s.
double trig_poly_argmin(double a0, double a1, double b1, double a2, double b2);

}  // namespace mgeo
