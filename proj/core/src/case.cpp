#include "mgeo/case.hpp"

#include <cmath>

#include "mgeo/errors.hpp"

namespace mgeo {

void validate(const CaseConfig& cfg) {
  if (cfg.n < 1) throw ArgumentError("immersion.n: must be a positive integer");
  if (cfg.points.empty() && cfg.grid.empty()) throw ArgumentError("grid: no points");
  if (cfg.points.empty()) {
    if (static_cast<int>(cfg.grid.size()) != cfg.n) {
      throw ArgumentError("grid: expected one axis per parameter (" + std::to_string(cfg.n) + ")");
    }
    for (std::size_t i = 0; i < cfg.grid.size(); ++i) {
      const GridAxis& a = cfg.grid[i];
      const std::string where = "grid[" + std::to_string(i) + "]";
      if (a.count < 1) throw ArgumentError(where + ".count: must be >= 1");
      if (!std::isfinite(a.min) || !std::isfinite(a.max)) {
        throw ArgumentError(where + ": bounds must be finite");
      }
      if (a.count > 1 && !(a.max > a.min)) throw ArgumentError(where + ": max must exceed min");
    }
  }
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    if (static_cast<int>(cfg.points[i].size()) != cfg.n) {
      throw ArgumentError("grid.points[" + std::to_string(i) + "]: expected " +
                          std::to_string(cfg.n) + " coordinates");
    }
  }
  if (!(cfg.tol > 0.0)) throw ArgumentError("numerics.tol: must be positive");
  if (!(cfg.eq_tol > 0.0)) throw ArgumentError("numerics.eq_tol: must be positive");
  if (cfg.restarts < 0) throw ArgumentError("numerics.restarts: must be non-negative");
  for (TheoremId t : cfg.theorems) {
    // S(n) is empty for n = 2, so there chen is simply not applicable.
    if (t == TheoremId::chen && cfg.tuples.empty() && cfg.n >= 3) {
      throw ArgumentError("analysis.tuples: required by theorem 'chen'");
    }
    if (t == TheoremId::shape_ricci && cfg.k_values.empty()) {
      throw ArgumentError("analysis.k_values: required by theorem 'shape-ricci'");
    }
    if (t == TheoremId::casorati && cfg.u_values.empty()) {
      throw ArgumentError("analysis.u_values: required by theorem 'casorati'");
    }
  }
  if (!cfg.theorems.empty() && cfg.n < 2) {
    throw ArgumentError("analysis.theorems: the inequalities need n >= 2");
  }
  for (std::size_t i = 0; i < cfg.tuples.size(); ++i) {
    try {
      check_chen_tuple(cfg.n, cfg.tuples[i]);
    } catch (const ArgumentError& e) {
      throw ArgumentError("analysis.tuples[" + std::to_string(i) + "]: " + e.what());
    }
  }
  for (std::size_t i = 0; i < cfg.k_values.size(); ++i) {
    const int k = cfg.k_values[i];
    if (k < 2 || k > cfg.n) {
      throw ArgumentError("analysis.k_values[" + std::to_string(i) + "]: need 2 <= k <= n");
    }
  }
  for (std::size_t i = 0; i < cfg.u_values.size(); ++i) {
    const double u = cfg.u_values[i];
    if (!(u > 0.0) || u == cfg.n * (cfg.n - 1.0)) {
      throw ArgumentError("analysis.u_values[" + std::to_string(i) +
                          "]: need u > 0 and u != n(n-1)");
    }
  }
  for (const auto* dist : {&cfg.d1, &cfg.d2}) {
    const char* name = dist == &cfg.d1 ? "D1" : "D2";
    for (std::size_t i = 0; i < dist->size(); ++i) {
      if (static_cast<int>((*dist)[i].size()) != cfg.n) {
        throw ArgumentError(std::string("analysis.distributions.") + name + "[" +
                            std::to_string(i) + "]: expected " + std::to_string(cfg.n) +
                            " components");
      }
    }
  }
  if (cfg.d1.empty() && !cfg.d2.empty()) {
    throw ArgumentError("analysis.distributions: D2 given without D1");
  }
}

std::vector<std::vector<double>> grid_points(const CaseConfig& cfg) {
  if (!cfg.points.empty()) return cfg.points;
  std::vector<std::vector<double>> out{{}};
  for (const GridAxis& a : cfg.grid) {
    std::vector<std::vector<double>> next;
    for (const auto& head : out)
      for (int i = 0; i < a.count; ++i) {
        auto p = head;
        p.push_back(a.count == 1 ? a.min : a.min + (a.max - a.min) * i / (a.count - 1.0));
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

SpaceSpec flat_space(int m1, int m2) {
  SpaceSpec s;
  s.m1 = m1;
  s.m2 = m2;
  return s;
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> out;
  const std::vector<TheoremId> all(std::begin(kAllTheorems), std::end(kAllTheorems));
  const std::vector<TheoremId> no_chen = {TheoremId::wintgen, TheoremId::shape_ricci,
                                          TheoremId::mean_scalar, TheoremId::casorati};
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "flat-invariant-plane";
    c.space = flat_space(2, 1);
    c.n = 2;
    c.coords = {"u1", "u2", "0"};
    c.grid = {{-1.0, 1.0, 5}, {-1.0, 1.0, 4}};
    c.theorems = all;
    c.k_values = {2};
    c.u_values = {1.0, 3.0};
    e.summary = "the plane R^2 x {0} in flat R^2 x R^1, (p,q) = (1,1)";
    e.highlights = {"all invariants vanish",
                    "equality in wintgen, shape-ricci, mean-scalar and casorati",
                    "chen is not applicable: no admissible tuple at n = 2"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "flat-invariant-3space";
    c.space = flat_space(3, 1);
    c.n = 3;
    c.coords = {"u1", "u2", "u3", "0"};
    c.grid = {{-1.0, 1.0, 2}, {-1.0, 1.0, 2}, {0.0, 1.0, 2}};
    c.theorems = all;
    c.tuples = {{2}};
    c.k_values = {2, 3};
    c.u_values = {1.0};
    e.summary = "R^3 x {0} in flat R^3 x R^1, (p,q) = (1,1)";
    e.highlights = {"all invariants vanish", "equality in all five inequalities, chen with tuple (2)"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "mixed-slant-plane";
    c.space = flat_space(2, 2);
    c.n = 2;
    c.coords = {"u1", "u2", "u1", "u2"};
    c.grid = {{-1.0, 1.0, 5}, {-1.0, 1.0, 4}};
    c.theorems = no_chen;
    c.k_values = {2};
    c.u_values = {1.0};
    e.summary =
        "the plane spanned by (e1+e3)/sqrt(2), (e2+e4)/sqrt(2) in flat R^2 x R^2, (p,q) = (1,1)";
    e.highlights = {"proper slant with cos^2(theta) = 1/6, theta = 65.905 deg",
                    "totally geodesic: equality in wintgen, shape-ricci, mean-scalar, casorati"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "circle";
    c.space = flat_space(2, 1);
    c.n = 1;
    c.coords = {"r*cos(u1)", "r*sin(u1)", "0"};
    c.constants = {{"r", 2.0}};
    c.grid = {{0.0, 6.0, 20}};
    e.summary = "circle of radius r = 2 in the first factor of flat R^2 x R^1";
    e.highlights = {"|H| = 1/r = 0.5 at every point", "invariant (theta = 0)",
                    "no inequality applies at n = 1"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "torus-in-flat";
    c.space = flat_space(2, 2);
    c.n = 2;
    c.coords = {"a*cos(u1)", "a*sin(u1)", "b*cos(u2)", "b*sin(u2)"};
    c.constants = {{"a", 1.0}, {"b", 2.0}};
    c.grid = {{0.0, 5.0, 5}, {0.0, 5.0, 4}};
    c.theorems = no_chen;
    c.k_values = {2};
    c.u_values = {1.0, 3.0};
    c.d1 = {{"1", "0"}};
    c.d2 = {{"0", "1"}};
    e.summary = "product of circles of radii a = 1, b = 2, one in each factor of flat R^2 x R^2";
    e.highlights = {"flat (tau = 0), |H|^2 = (1/a^2 + 1/b^2)/4 = 0.3125",
                    "bi-slant with D1 = d/du1, D2 = d/du2, both invariant",
                    "strict slack in every inequality"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "sphere-in-flat";
    c.space = flat_space(3, 1);
    c.n = 2;
    c.coords = {"sin(u1)*cos(u2)", "sin(u1)*sin(u2)", "cos(u1)", "0"};
    c.grid = {{0.4, 2.7, 5}, {0.0, 5.0, 4}};
    c.theorems = no_chen;
    c.k_values = {2};
    c.u_values = {1.0, 3.0};
    e.summary = "unit sphere S^2 in the first factor of flat R^3 x R^1";
    e.highlights = {"tau = 1, |H|^2 = 1, C = 1",
                    "equality in wintgen and mean-scalar (umbilical)",
                    "casorati slack 0.5 at u = 1 and 1/6 at u = 3",
                    "shape-ricci slack 2 at k = 2"};
    out.push_back(std::move(e));
  }
  {
    CatalogueEntry e;
    CaseConfig& c = e.config;
    c.name = "sphere-times-sphere";
    c.space.m1 = 2;
    c.space.m2 = 2;
    c.space.c1 = 1.0;
    c.space.c2 = 4.0;
    c.space.factor1 = FactorRealization::sphere(1.0);
    c.space.factor2 = FactorRealization::sphere(0.5);
    c.n = 2;
    c.coords = {"sin(u1)*cos(u2)", "sin(u1)*sin(u2)", "cos(u1)", "0", "0", "0.5"};
    c.grid = {{0.4, 2.7, 5}, {0.0, 5.0, 4}};
    c.theorems = no_chen;
    c.k_values = {2};
    c.u_values = {1.0};
    e.summary = "the totally geodesic slice S^2(1) x {pt} in S^2(1) x S^2(1/2), c1 = 1, c2 = 4";
    e.highlights = {"tau = 1, H = 0, invariant (T = sigma I)",
                    "the derivation check matches 2 tau only with tr^2 phi = tr(T^2) and the "
                    "matched sign",
                    "wintgen and mean-scalar are equalities under tr^2 phi = tr(T^2) and strict "
                    "under (tr T)^2"};
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = build_catalogue();
  return entries;
}

const CatalogueEntry* find_example(const std::string& name) {
  for (const CatalogueEntry& e : catalogue())
    if (e.config.name == name) return &e;
  return nullptr;
}

}  // namespace mgeo
