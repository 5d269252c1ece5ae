#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mgeo/sweep.hpp"

namespace mgeo::testing {

struct Fixture {
  CompiledCase compiled;
  SubmanifoldPointData pd;
  PointBundle bundle;
};

/// Point data and bundle of a case at u, with the case's distributions.
Fixture fixture_at(const CaseConfig& cfg, const std::vector<double>& u);

/// Built-in catalogue case; aborts the test binary for an unknown name.
const CaseConfig& example(const std::string& name);

/// Single-point case at u = 0 with no theorems requested.
CaseConfig make_case(const SpaceSpec& space, int n, std::vector<std::string> coords,
                     std::vector<std::pair<std::string, double>> constants = {});

/// S^n(1) in the first factor of flat R^(n+1) x R^1; regular away from u_j in {0, pi}.
CaseConfig unit_sphere_in_flat(int n);

SpaceSpec flat_space(int m1, int m2, int p = 1, int q = 1, Branch branch = Branch::first);

}  // namespace mgeo::testing
