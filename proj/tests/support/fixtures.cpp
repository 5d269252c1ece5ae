#include "fixtures.hpp"

#include <cstdio>
#include <cstdlib>
#include <algorithm>

namespace mgeo::testing {

Fixture fixture_at(const CaseConfig& cfg, const std::vector<double>& u) {
  CaseConfig at = cfg;
  at.grid.clear();
  at.points = {u};
  Fixture f{compile_case(at), {}, {}};
  f.pd = point_data(f.compiled.spec, u);
  const auto [D1, D2] = distributions_at(f.compiled, f.pd);
  f.bundle = make_bundle(f.compiled.spec, f.pd, D1, D2);
  return f;
}

const CaseConfig& example(const std::string& name) {
  const CatalogueEntry* e = find_example(name);
  if (!e) {
    std::fprintf(stderr, "unknown example %s\n", name.c_str());
    std::abort();
  }
  return e->config;
}

CaseConfig make_case(const SpaceSpec& space, int n, std::vector<std::string> coords,
                     std::vector<std::pair<std::string, double>> constants) {
  CaseConfig c;
  c.name = "test";
  c.space = space;
  c.n = n;
  c.coords = std::move(coords);
  c.constants = std::move(constants);
  c.points = {std::vector<double>(n, 0.0)};
  return c;
}

CaseConfig unit_sphere_in_flat(int n) {
  // Hyperspherical coordinates of S^n(1) in the first factor of R^(n+1) x R^1.
  std::vector<std::string> coords;
  for (int i = 0; i <= n; ++i) {
    std::string e;
    for (int j = 1; j <= std::min(i + 1, n); ++j) {
      if (!e.empty()) e += "*";
      const bool last = j == i + 1;
      e += std::string(last ? "cos" : "sin") + "(u" + std::to_string(j) + ")";
    }
    if (i == n) {
      e.clear();
      for (int j = 1; j <= n; ++j) e += (j > 1 ? "*" : "") + std::string("sin(u") + std::to_string(j) + ")";
    }
    coords.push_back(e);
  }
  coords.push_back("0");
  return make_case(flat_space(n + 1, 1), n, coords);
}

SpaceSpec flat_space(int m1, int m2, int p, int q, Branch branch) {
  SpaceSpec s;
  s.m1 = m1;
  s.m2 = m2;
  s.p = p;
  s.q = q;
  s.branch = branch;
  return s;
}

}  // namespace mgeo::testing
