#include "mgeo_report/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "mgeo/oracles.hpp"
#include "mgeo/sweep.hpp"

namespace mgeo::report {

namespace {

constexpr double kDerivationTol = 1e-6;

// Non-finite values become null so that every number in a report is finite.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json pairs(const std::vector<std::pair<std::string, double>>& v) {
  json o = json::object();
  for (const auto& [k, x] : v) o[k] = num(x);
  return o;
}

json interpretation(const CompiledCase& c) {
  const ProductSpaceForm& sp = c.spec.space;
  json j;
  j["tr2_phi"] = to_string(c.config.reading);
  j["tr2_phi_readings"] = {{"outer", "(tr T)^2"}, {"trace-of-square", "tr(T^2)"}};
  j["curvature_sign"] = to_string(sp.curv_sign());
  j["curvature_sign_matched"] = sp.curv_sign_matched();
  j["matched_sign"] = to_string(sp.matched_sign());
  j["branch"] = to_string(sp.branch());
  j["opposite_sign_reported"] = sp.c1() != sp.c2();
  j["ddvv_bracket"] = "squared";
  j["distribution_dimensions"] = "d1 and d2 are the dimensions of D1 and D2";
  j["empty_D2"] = "theta2 = theta1";
  j["shape_ricci_lhs"] = "(tr A_xi)^2 for the unit normal xi along H, i.e. n^2 |H|^2";
  j["shape_ricci_equality"] =
      "ricci_spread measures constancy; info_ricci_magnitude reports the magnitude";
  return j;
}

json space_summary(const CompiledCase& c) {
  const ProductSpaceForm& sp = c.spec.space;
  json j;
  j["sigma"] = sp.params().sigma;
  j["alpha"] = sp.params().alpha;
  j["matched_deviation"] = sp.matched_deviation();
  j["opposite_deviation"] = sp.opposite_deviation();
  return j;
}

json invariants_json(const PointResult& r, const MetallicParams& params) {
  json j;
  j["tau"] = r.invariants.tau;
  j["rho"] = r.invariants.rho;
  j["rho_perp"] = r.invariants.rho_perp;
  j["H_sq"] = r.invariants.H_sq;
  j["C"] = r.invariants.C;
  j["metric_cond"] = r.metric_cond;
  json& s = j["slant"];
  s["d1"] = r.slant.d1;
  s["d2"] = r.slant.d2;
  s["theta1"] = r.slant.theta1;
  s["theta2"] = r.slant.theta2;
  s["theta1_deg"] = r.slant.theta1 * 180.0 / std::numbers::pi;
  s["theta2_deg"] = r.slant.theta2 * 180.0 / std::numbers::pi;
  s["angle_dev1"] = r.slant.angle_dev1;
  s["angle_dev2"] = r.slant.angle_dev2;
  s["lemma_residual_1"] = r.slant.lemma_residual_1;
  s["lemma_residual_2"] = r.slant.lemma_residual_2;
  s["bislant"] = r.slant.bislant();
  s["vartheta"] = r.slant.vartheta(1, params) + r.slant.vartheta(2, params);
  json& t = j["traces"];
  t["tr_T"] = r.traces.tr_T;
  t["tr_T_outer"] = r.traces.tr_T_outer;
  t["tr_T2"] = r.traces.tr_T2;
  t["tr_TP1"] = r.traces.tr_TP1;
  t["tr_TP2"] = r.traces.tr_TP2;
  t["norm_T_sq"] = r.traces.norm_T_sq;
  return j;
}

json result_json(const InequalityResult& r) {
  json j;
  j["theorem"] = to_string(r.theorem);
  j["label"] = r.label;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["holds"] = r.holds;
  j["equality"] = r.equality;
  j["tr2_phi"] = to_string(r.reading);
  j["sign"] = to_string(r.sign);
  if (r.opposite_sign_slack) j["opposite_sign_slack"] = num(*r.opposite_sign_slack);
  j["other_reading_slack"] = num(r.other_reading_slack);
  json& e = j["equality_pattern"];
  e["kind"] = to_string(r.equality_case.kind);
  e["residual"] = num(r.equality_case.residual);
  e["fitted"] = pairs(r.equality_case.fitted);
  e["components"] = pairs(r.equality_case.components);
  j["details"] = pairs(r.details);
  return j;
}

json point_header(const PointResult& r) {
  json j;
  j["index"] = r.index;
  j["u"] = r.u;
  j["status"] = r.ok() ? "ok" : "skipped";
  if (!r.ok()) {
    j["error_kind"] = r.error_kind;
    j["error"] = r.error;
  }
  return j;
}

std::string key_of(const InequalityResult& r) {
  return r.label.empty() ? to_string(r.theorem) : std::string(to_string(r.theorem)) + " " + r.label;
}

struct Worst {
  double slack = std::numeric_limits<double>::infinity();
  std::size_t point = 0;
};

void track(std::map<std::string, Worst>& m, const std::string& key, double slack, std::size_t point) {
  Worst& w = m[key];
  if (slack < w.slack) w = {slack, point};
}

json worst_json(const std::vector<std::string>& order, std::map<std::string, Worst>& m) {
  json j = json::object();
  for (const std::string& k : order) {
    if (!m.count(k)) continue;
    j[k] = {{"slack", num(m[k].slack)}, {"point", m[k].point}};
  }
  return j;
}

json base_report(const char* command, const CompiledCase& c) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["case"] = c.config.name;
  j["config"] = config_to_json(c.config);
  j["interpretation"] = interpretation(c);
  j["space"] = space_summary(c);
  return j;
}

std::size_t valid_count(const std::vector<PointResult>& pts) {
  return static_cast<std::size_t>(std::count_if(pts.begin(), pts.end(), [](const PointResult& p) { return p.ok(); }));
}

}  // namespace

int worker_threads() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("METALLIC_GEO_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

Outcome cmd_invariants(const CaseConfig& cfg, int threads) {
  const CompiledCase c = compile_case(cfg);
  const auto pts = run_sweep(c, {}, threads);
  json rep = base_report("invariants", c);
  json& arr = rep["points"] = json::array();
  for (const PointResult& p : pts) {
    json j = point_header(p);
    if (p.ok()) j["invariants"] = invariants_json(p, c.spec.space.params());
    arr.push_back(std::move(j));
  }
  const std::size_t valid = valid_count(pts);
  Outcome out;
  out.exit_status = valid == 0 ? numerical_failure : ok;
  rep["summary"] = {{"points", pts.size()},
                    {"valid_points", valid},
                    {"skipped_points", pts.size() - valid},
                    {"exit_status", out.exit_status}};
  out.report = std::move(rep);
  return out;
}

Outcome cmd_verify(const CaseConfig& cfg, int threads) {
  if (cfg.theorems.empty()) throw ConfigError("analysis.theorems: nothing to verify");
  const CompiledCase c = compile_case(cfg);
  const auto pts = run_sweep(c, {true, false}, threads);
  json rep = base_report("verify", c);
  json& arr = rep["points"] = json::array();

  std::vector<std::string> order;
  std::map<std::string, Worst> worst, worst_opposite, worst_other;
  std::map<std::string, std::size_t> equalities, evaluated;
  json events = json::array();
  for (const PointResult& p : pts) {
    json j = point_header(p);
    if (p.ok()) {
      j["invariants"] = invariants_json(p, c.spec.space.params());
      json& res = j["results"] = json::array();
      for (const InequalityResult& r : p.results) {
        res.push_back(result_json(r));
        const std::string k = key_of(r);
        if (!evaluated.count(k)) order.push_back(k);
        ++evaluated[k];
        if (r.equality) ++equalities[k];
        track(worst, k, r.slack, p.index);
        if (r.opposite_sign_slack) track(worst_opposite, k, *r.opposite_sign_slack, p.index);
        track(worst_other, k, r.other_reading_slack, p.index);
        if (r.slack < -cfg.tol) {
          events.push_back({{"point", p.index},
                            {"u", p.u},
                            {"theorem", to_string(r.theorem)},
                            {"label", r.label},
                            {"lhs", num(r.lhs)},
                            {"rhs", num(r.rhs)},
                            {"slack", num(r.slack)}});
        }
      }
    }
    arr.push_back(std::move(j));
  }
  const std::size_t valid = valid_count(pts);
  Outcome out;
  out.exit_status = !events.empty() ? falsified : valid == 0 ? numerical_failure : ok;

  json& s = rep["summary"];
  s["points"] = pts.size();
  s["valid_points"] = valid;
  s["skipped_points"] = pts.size() - valid;
  s["tol"] = cfg.tol;
  s["eq_tol"] = cfg.eq_tol;
  s["worst_slack"] = worst_json(order, worst);
  json eq = json::object();
  for (const std::string& k : order) eq[k] = {{"equalities", equalities[k]}, {"evaluated", evaluated[k]}};
  s["equality_counts"] = eq;
  s["worst_slack_opposite_sign"] = worst_json(order, worst_opposite);
  s["worst_slack_other_tr2_reading"] = worst_json(order, worst_other);
  json na = json::array();
  for (TheoremId t : cfg.theorems)
    if (t == TheoremId::chen && cfg.tuples.empty()) na.push_back("chen: no admissible tuple at n = " + std::to_string(cfg.n));
  s["not_applicable"] = std::move(na);
  s["falsification_count"] = events.size();
  s["falsifications"] = std::move(events);
  s["exit_status"] = out.exit_status;
  out.report = std::move(rep);
  return out;
}

Outcome cmd_check_derivation(const CaseConfig& cfg, int threads) {
  if (cfg.n < 2) throw ConfigError("immersion.n: the derivation check needs n >= 2");
  const CompiledCase c = compile_case(cfg);
  const auto pts = run_sweep(c, {false, true}, threads);
  json rep = base_report("check-derivation", c);
  rep["match_tol"] = kDerivationTol;

  const auto combo = [](const DerivationRow& row) {
    return std::string(to_string(row.reading)) + " " + to_string(row.sign);
  };
  std::vector<std::string> order;
  std::map<std::string, double> max_abs;
  std::map<std::string, std::size_t> matched;
  json& arr = rep["points"] = json::array();
  for (const PointResult& p : pts) {
    json j = point_header(p);
    if (p.ok() && p.derivation) {
      const DerivationCheck& d = *p.derivation;
      j["tau_direct_2"] = d.tau_direct_2;
      j["extrinsic"] = d.extrinsic;
      j["ambient_direct"] = d.ambient_direct;
      j["ambient_exact"] = d.ambient_exact;
      j["implied_tr2"] = num(d.implied_tr2);
      j["tr_T_outer"] = p.traces.tr_T_outer;
      j["tr_T2"] = p.traces.tr_T2;
      json& rows = j["rows"] = json::array();
      for (const DerivationRow& row : d.rows) {
        const std::string k = combo(row);
        if (!max_abs.count(k)) {
          order.push_back(k);
          max_abs[k] = 0.0;
          matched[k] = 0;
        }
        const bool m = std::abs(row.residual) <= kDerivationTol;
        max_abs[k] = std::max(max_abs[k], std::abs(row.residual));
        if (m) ++matched[k];
        rows.push_back({{"tr2_phi", to_string(row.reading)},
                        {"sign", to_string(row.sign)},
                        {"residual", num(row.residual)},
                        {"matches", m}});
      }
      json& mm = j["matching"] = json::array();
      for (std::size_t i : d.matching(kDerivationTol)) mm.push_back(combo(d.rows[i]));
    }
    arr.push_back(std::move(j));
  }
  const std::size_t valid = valid_count(pts);
  Outcome out;
  out.exit_status = valid == 0 ? numerical_failure : ok;
  json& s = rep["summary"];
  s["points"] = pts.size();
  s["valid_points"] = valid;
  s["skipped_points"] = pts.size() - valid;
  json combos = json::object();
  json consistent = json::array();
  for (const std::string& k : order) {
    combos[k] = {{"max_abs_residual", num(max_abs[k])}, {"points_matching", matched[k]}};
    if (valid > 0 && matched[k] == valid) consistent.push_back(k);
  }
  s["combinations"] = std::move(combos);
  s["consistent_everywhere"] = std::move(consistent);
  s["exit_status"] = out.exit_status;
  out.report = std::move(rep);
  return out;
}

Outcome cmd_oracles(const OracleOptions& opt) {
  const ChenLemmaSuite chen = run_chen_lemma_suite(opt.chen_samples, opt.seed);
  const DdvvSuite ddvv = run_ddvv_suite(opt.ddvv_samples, opt.seed);
  json rep;
  rep["schema"] = kSchema;
  rep["command"] = "oracles";
  rep["seed"] = opt.seed;
  rep["interpretation"] = {{"ddvv_bracket", "squared"}};
  json& su = rep["suites"];
  su["chen_lemma"] = {{"samples", chen.samples},
                      {"violations", chen.violations},
                      {"worst_gap", num(chen.worst_gap)},
                      {"equality_hits", chen.equality_hits},
                      {"equality_criterion_failures", chen.equality_criterion_failures},
                      {"worst_criterion_residual", num(chen.worst_criterion_residual)}};
  su["ddvv"] = {{"samples", ddvv.samples},
                {"violations", ddvv.violations},
                {"worst_slack", num(ddvv.worst_slack)},
                {"reference_slack", num(ddvv.reference_slack)},
                {"unsquared_violations", ddvv.unsquared_violations},
                {"worst_unsquared_slack", num(ddvv.worst_unsquared_slack)}};
  Outcome out;
  const bool bad = chen.violations > 0 || chen.equality_criterion_failures > 0 || ddvv.violations > 0;
  out.exit_status = bad ? falsified : ok;
  rep["summary"] = {{"exit_status", out.exit_status}};
  out.report = std::move(rep);
  return out;
}

Outcome cmd_examples() {
  json rep;
  rep["schema"] = kSchema;
  rep["command"] = "examples";
  json& arr = rep["examples"] = json::array();
  for (const CatalogueEntry& e : catalogue()) {
    arr.push_back({{"name", e.config.name},
                   {"summary", e.summary},
                   {"highlights", e.highlights},
                   {"config", config_to_json(e.config)}});
  }
  return {std::move(rep), ok};
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace mgeo::report
