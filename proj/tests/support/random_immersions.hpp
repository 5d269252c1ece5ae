#pragma once

// Random immersions whose tangent space at u = 0 has a prescribed slant type.
//
// At the base point the tangent vectors are X = cos(t) a + sin(t) b with a, b
// unit vectors tangent to factor 1 and factor 2. phi acts on them as
// lambda1 cos^2 t + lambda2 sin^2 t on the tangential side, so each family of
// such vectors with a common t spans a slant distribution. Second-order terms
// are random.

#include <random>
#include <string>
#include <vector>

#include "mgeo/case.hpp"

namespace mgeo::testing {

enum class SlantKind { invariant, anti_invariant, proper_slant, bislant };
const char* to_string(SlantKind k);

enum class AmbientKind { flat_flat, sphere_flat, flat_sphere, sphere_sphere };
const char* to_string(AmbientKind k);

struct RandomImmersion {
  SlantKind kind = SlantKind::invariant;
  AmbientKind ambient = AmbientKind::flat_flat;
  CaseConfig config;          ///< single point u = 0, distributions set for bi-slant
  double expected_theta1 = 0.0;
  double expected_theta2 = 0.0;
  int d1 = 0;
  int d2 = 0;
};

/// Theorems: all five with every admissible tuple, k in [2, n], u in {1, n(n-1)+1};
/// none for n = 1.
RandomImmersion random_immersion(SlantKind kind, AmbientKind ambient, int n, std::mt19937_64& rng);

/// Every tuple of S(n).
std::vector<std::vector<int>> admissible_tuples(int n);

/// Uniform (Haar) random orthogonal matrix.
Matrix haar_orthogonal(int n, std::mt19937_64& rng);
Matrix random_symmetric(int n, std::mt19937_64& rng, double scale = 1.0);

}  // namespace mgeo::testing
