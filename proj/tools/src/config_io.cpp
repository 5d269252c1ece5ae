#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "mgeo_report/report.hpp"

namespace mgeo::report {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string join(const std::string& base, const std::string& key) {
  return base.empty() ? key : base + "." + key;
}
std::string index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

void only_keys(const json& j, const std::string& path, std::set<std::string> allowed) {
  if (!j.is_object()) fail(path.empty() ? "config" : path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(join(path, it.key()), "unknown field");
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "must be finite");
  return v;
}

std::int64_t integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

FactorRealization parse_factor(const json& j, const std::string& path, double c) {
  if (j.is_string()) {
    const std::string kind = j.get<std::string>();
    if (kind == "flat") return FactorRealization::flat();
    if (kind == "sphere") {
      if (!(c > 0.0)) fail(path, "a sphere factor needs positive curvature");
      return FactorRealization::sphere(1.0 / std::sqrt(c));
    }
    fail(path, "expected \"flat\" or \"sphere\"");
  }
  only_keys(j, path, {"kind", "radius"});
  if (!j.contains("kind")) fail(join(path, "kind"), "missing");
  const std::string kind = string(j["kind"], join(path, "kind"));
  if (kind == "flat") {
    if (j.contains("radius")) fail(join(path, "radius"), "a flat factor has no radius");
    return FactorRealization::flat();
  }
  if (kind != "sphere") fail(join(path, "kind"), "expected \"flat\" or \"sphere\"");
  if (j.contains("radius")) return FactorRealization::sphere(number(j["radius"], join(path, "radius")));
  if (!(c > 0.0)) fail(path, "a sphere factor needs positive curvature");
  return FactorRealization::sphere(1.0 / std::sqrt(c));
}

SpaceSpec parse_space(const json& j) {
  const std::string path = "space";
  only_keys(j, path, {"m1", "m2", "c1", "c2", "p", "q", "branch", "curv_sign", "factor1", "factor2"});
  SpaceSpec s;
  for (const char* key : {"m1", "m2"})
    if (!j.contains(key)) fail(join(path, key), "missing");
  s.m1 = static_cast<int>(integer(j["m1"], "space.m1"));
  s.m2 = static_cast<int>(integer(j["m2"], "space.m2"));
  if (j.contains("c1")) s.c1 = number(j["c1"], "space.c1");
  if (j.contains("c2")) s.c2 = number(j["c2"], "space.c2");
  if (j.contains("p")) s.p = static_cast<int>(integer(j["p"], "space.p"));
  if (j.contains("q")) s.q = static_cast<int>(integer(j["q"], "space.q"));
  if (j.contains("branch")) {
    const std::string b = string(j["branch"], "space.branch");
    if (b == "first") s.branch = Branch::first;
    else if (b == "second") s.branch = Branch::second;
    else fail("space.branch", "expected \"first\" or \"second\"");
  }
  if (j.contains("curv_sign")) {
    const std::string sg = string(j["curv_sign"], "space.curv_sign");
    if (sg == "+") s.curv_sign = Sign::plus;
    else if (sg == "-") s.curv_sign = Sign::minus;
    else fail("space.curv_sign", "expected \"+\" or \"-\"");
  }
  const auto default_factor = [](double c) {
    return c > 0.0 ? FactorRealization::sphere(1.0 / std::sqrt(c)) : FactorRealization::flat();
  };
  s.factor1 = j.contains("factor1") ? parse_factor(j["factor1"], "space.factor1", s.c1)
                                    : default_factor(s.c1);
  s.factor2 = j.contains("factor2") ? parse_factor(j["factor2"], "space.factor2", s.c2)
                                    : default_factor(s.c2);
  return s;
}

std::vector<std::vector<std::string>> parse_distribution(const json& j, const std::string& path) {
  std::vector<std::vector<std::string>> out;
  array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = index(path, i);
    array(j[i], p);
    std::vector<std::string> v;
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      if (j[i][c].is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << number(j[i][c], index(p, c));
        v.push_back(os.str());
      } else {
        v.push_back(string(j[i][c], index(p, c)));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<TheoremId> parse_theorem_list(const std::string& text) {
  if (text == "all") return {std::begin(kAllTheorems), std::end(kAllTheorems)};
  std::vector<TheoremId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = parse_theorem(item);
    if (!t) {
      throw ConfigError("--ineq: unknown theorem '" + item +
                        "' (wintgen, chen, shape-ricci, mean-scalar, casorati, all)");
    }
    out.push_back(*t);
  }
  if (out.empty()) throw ConfigError("--ineq: empty list");
  return out;
}

CaseConfig parse_config(const json& j) {
  only_keys(j, "", {"schema", "name", "space", "immersion", "grid", "analysis", "numerics"});
  if (j.contains("schema") && string(j["schema"], "schema") != kSchema) {
    fail("schema", std::string("expected \"") + kSchema + "\"");
  }
  CaseConfig cfg;
  if (j.contains("name")) cfg.name = string(j["name"], "name");
  if (!j.contains("space")) fail("space", "missing");
  cfg.space = parse_space(j["space"]);

  if (!j.contains("immersion")) fail("immersion", "missing");
  const json& im = j["immersion"];
  only_keys(im, "immersion", {"n", "coords", "constants"});
  if (!im.contains("n")) fail("immersion.n", "missing");
  cfg.n = static_cast<int>(integer(im["n"], "immersion.n"));
  if (!im.contains("coords")) fail("immersion.coords", "missing");
  const json& coords = array(im["coords"], "immersion.coords");
  for (std::size_t i = 0; i < coords.size(); ++i)
    cfg.coords.push_back(string(coords[i], index("immersion.coords", i)));
  if (im.contains("constants")) {
    const json& cs = im["constants"];
    if (!cs.is_object()) fail("immersion.constants", "expected an object of name: value");
    for (auto it = cs.begin(); it != cs.end(); ++it)
      cfg.constants.emplace_back(it.key(), number(it.value(), "immersion.constants." + it.key()));
  }

  if (!j.contains("grid")) fail("grid", "missing");
  const json& grid = j["grid"];
  if (grid.is_object()) {
    only_keys(grid, "grid", {"points"});
    if (!grid.contains("points")) fail("grid.points", "missing");
    const json& pts = array(grid["points"], "grid.points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::string p = index("grid.points", i);
      std::vector<double> u;
      for (std::size_t c = 0; c < array(pts[i], p).size(); ++c) u.push_back(number(pts[i][c], index(p, c)));
      cfg.points.push_back(std::move(u));
    }
  } else {
    array(grid, "grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const std::string p = index("grid", i);
      only_keys(grid[i], p, {"min", "max", "count"});
      for (const char* key : {"min", "max", "count"})
        if (!grid[i].contains(key)) fail(join(p, key), "missing");
      GridAxis a;
      a.min = number(grid[i]["min"], join(p, "min"));
      a.max = number(grid[i]["max"], join(p, "max"));
      a.count = static_cast<int>(integer(grid[i]["count"], join(p, "count")));
      cfg.grid.push_back(a);
    }
  }

  if (j.contains("analysis")) {
    const json& an = j["analysis"];
    only_keys(an, "analysis",
              {"theorems", "tuples", "k_values", "u_values", "distributions", "tr2_reading"});
    if (an.contains("theorems")) {
      const json& ts = array(an["theorems"], "analysis.theorems");
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string name = string(ts[i], index("analysis.theorems", i));
        if (name == "all") {
          cfg.theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
          continue;
        }
        const auto t = parse_theorem(name);
        if (!t) fail(index("analysis.theorems", i), "unknown theorem '" + name + "'");
        cfg.theorems.push_back(*t);
      }
    }
    if (an.contains("tuples")) {
      const json& ts = array(an["tuples"], "analysis.tuples");
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string p = index("analysis.tuples", i);
        std::vector<int> t;
        for (std::size_t c = 0; c < array(ts[i], p).size(); ++c)
          t.push_back(static_cast<int>(integer(ts[i][c], index(p, c))));
        cfg.tuples.push_back(std::move(t));
      }
    }
    if (an.contains("k_values")) {
      const json& ks = array(an["k_values"], "analysis.k_values");
      for (std::size_t i = 0; i < ks.size(); ++i)
        cfg.k_values.push_back(static_cast<int>(integer(ks[i], index("analysis.k_values", i))));
    }
    if (an.contains("u_values")) {
      const json& us = array(an["u_values"], "analysis.u_values");
      for (std::size_t i = 0; i < us.size(); ++i)
        cfg.u_values.push_back(number(us[i], index("analysis.u_values", i)));
    }
    if (an.contains("distributions")) {
      const json& ds = an["distributions"];
      only_keys(ds, "analysis.distributions", {"D1", "D2"});
      if (ds.contains("D1")) cfg.d1 = parse_distribution(ds["D1"], "analysis.distributions.D1");
      if (ds.contains("D2")) cfg.d2 = parse_distribution(ds["D2"], "analysis.distributions.D2");
    }
    if (an.contains("tr2_reading")) {
      const std::string r = string(an["tr2_reading"], "analysis.tr2_reading");
      if (r == "outer") cfg.reading = Tr2Reading::outer;
      else if (r == "trace-of-square") cfg.reading = Tr2Reading::trace_of_square;
      else fail("analysis.tr2_reading", "expected \"outer\" or \"trace-of-square\"");
    }
  }

  if (j.contains("numerics")) {
    const json& nu = j["numerics"];
    only_keys(nu, "numerics", {"seed", "restarts", "tol", "eq_tol"});
    if (nu.contains("seed")) {
      if (!nu["seed"].is_number_unsigned()) fail("numerics.seed", "expected a non-negative integer");
      cfg.seed = nu["seed"].get<std::uint64_t>();
    }
    if (nu.contains("restarts")) cfg.restarts = static_cast<int>(integer(nu["restarts"], "numerics.restarts"));
    if (nu.contains("tol")) cfg.tol = number(nu["tol"], "numerics.tol");
    if (nu.contains("eq_tol")) cfg.eq_tol = number(nu["eq_tol"], "numerics.eq_tol");
  }
  return cfg;
}

CaseConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_config(j);
}

json config_to_json(const CaseConfig& cfg) {
  const auto factor = [](const FactorRealization& f) {
    json o;
    o["kind"] = f.kind == FactorKind::flat ? "flat" : "sphere";
    if (f.kind == FactorKind::sphere) o["radius"] = f.radius;
    return o;
  };
  json j;
  j["schema"] = kSchema;
  j["name"] = cfg.name;
  json& sp = j["space"];
  sp["m1"] = cfg.space.m1;
  sp["m2"] = cfg.space.m2;
  sp["c1"] = cfg.space.c1;
  sp["c2"] = cfg.space.c2;
  sp["p"] = cfg.space.p;
  sp["q"] = cfg.space.q;
  sp["branch"] = to_string(cfg.space.branch);
  if (cfg.space.curv_sign) sp["curv_sign"] = to_string(*cfg.space.curv_sign);
  sp["factor1"] = factor(cfg.space.factor1);
  sp["factor2"] = factor(cfg.space.factor2);
  json& im = j["immersion"];
  im["n"] = cfg.n;
  im["coords"] = cfg.coords;
  im["constants"] = json::object();
  for (const auto& [name, v] : cfg.constants) im["constants"][name] = v;
  if (!cfg.points.empty()) {
    j["grid"]["points"] = cfg.points;
  } else {
    j["grid"] = json::array();
    for (const GridAxis& a : cfg.grid) j["grid"].push_back({{"min", a.min}, {"max", a.max}, {"count", a.count}});
  }
  json& an = j["analysis"];
  an["theorems"] = json::array();
  for (TheoremId t : cfg.theorems) an["theorems"].push_back(to_string(t));
  an["tuples"] = cfg.tuples;
  an["k_values"] = cfg.k_values;
  an["u_values"] = cfg.u_values;
  if (!cfg.d1.empty() || !cfg.d2.empty()) {
    an["distributions"]["D1"] = cfg.d1;
    an["distributions"]["D2"] = cfg.d2;
  }
  an["tr2_reading"] = to_string(cfg.reading);
  json& nu = j["numerics"];
  nu["seed"] = cfg.seed;
  nu["restarts"] = cfg.restarts;
  nu["tol"] = cfg.tol;
  nu["eq_tol"] = cfg.eq_tol;
  return j;
}

void apply(const Overrides& o, CaseConfig& cfg) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.restarts) cfg.restarts = *o.restarts;
  if (o.tol) cfg.tol = *o.tol;
  if (o.theorems) cfg.theorems = *o.theorems;
  if (o.reading) cfg.reading = *o.reading;
}

}  // namespace mgeo::report
