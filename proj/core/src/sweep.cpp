#include "mgeo/sweep.hpp"

#include <cstdio>

#include "mgeo/errors.hpp"
#include "mgeo/parallel.hpp"

namespace mgeo {

namespace {

// Prefixes a field path; the position suffix is re-added by the constructor.
ParseError with_path(const std::string& path, const ParseError& e) {
  std::string msg = e.what();
  const std::string suffix =
      " at line " + std::to_string(e.line()) + ", column " + std::to_string(e.column());
  if (msg.size() >= suffix.size() && msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0) {
    msg.resize(msg.size() - suffix.size());
  }
  return ParseError(path + ": " + msg, e.line(), e.column());
}

}  // namespace

CompiledCase compile_case(const CaseConfig& cfg) {
  validate(cfg);
  CompiledCase c;
  c.config = cfg;
  const ProductSpaceForm space = make_space(cfg.space);
  try {
    c.spec = make_immersion(space, cfg.n, cfg.coords, cfg.constants);
  } catch (const ParseError& e) {
    throw with_path("immersion.coords[" + std::to_string(e.line() - 1) + "]", e);
  }
  SymbolTable symbols{cfg.n, c.spec.constant_names};
  const auto parse = [&](const std::vector<std::vector<std::string>>& src, const char* name) {
    std::vector<std::vector<Expr>> out;
    for (std::size_t i = 0; i < src.size(); ++i) {
      std::vector<Expr> v;
      for (std::size_t j = 0; j < src[i].size(); ++j) {
        try {
          v.push_back(parse_expression(src[i][j], symbols, 1));
        } catch (const ParseError& e) {
          throw with_path(std::string("analysis.distributions.") + name + "[" +
                              std::to_string(i) + "][" + std::to_string(j) + "]",
                          e);
        }
      }
      out.push_back(std::move(v));
    }
    return out;
  };
  c.d1 = parse(cfg.d1, "D1");
  c.d2 = parse(cfg.d2, "D2");
  return c;
}

namespace {

std::optional<Matrix> eval_distribution(const CompiledCase& c,
                                        const std::vector<std::vector<Expr>>& exprs,
                                        const SubmanifoldPointData& pd) {
  if (exprs.empty()) return std::nullopt;
  Matrix coords(c.config.n, static_cast<int>(exprs.size()));
  for (std::size_t col = 0; col < exprs.size(); ++col)
    for (int r = 0; r < c.config.n; ++r)
      coords(r, static_cast<int>(col)) = exprs[col][r].eval(pd.u, c.spec.constant_values);
  return to_frame_coords(pd, coords);
}

std::string point_prefix(std::size_t index, const std::vector<double>& u) {
  std::string s = "point " + std::to_string(index) + " (u = ";
  for (std::size_t i = 0; i < u.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", u[i]);
    s += buf;
  }
  return s + "): ";
}

}  // namespace

std::pair<std::optional<Matrix>, std::optional<Matrix>> distributions_at(
    const CompiledCase& c, const SubmanifoldPointData& pd) {
  return {eval_distribution(c, c.d1, pd), eval_distribution(c, c.d2, pd)};
}

PointResult run_point(const CompiledCase& c, const std::vector<double>& u, std::size_t index,
                      SweepMode mode, int optimizer_threads) {
  PointResult r;
  r.index = index;
  r.u = u;
  const CaseConfig& cfg = c.config;
  try {
    const SubmanifoldPointData pd = point_data(c.spec, u);
    r.metric_cond = pd.metric_cond;
    const auto [D1, D2] = distributions_at(c, pd);
    const PointBundle b = make_bundle(c.spec, pd, D1, D2);
    r.invariants = curvature_invariants(b.geom);
    r.slant = b.slant;
    r.traces = b.traces;
    if (mode.verify) {
      VerifyOptions opt;
      opt.reading = cfg.reading;
      opt.eq_tol = cfg.eq_tol;
      opt.optimizer.restarts = cfg.restarts;
      opt.optimizer.seed = cfg.seed;
      opt.optimizer.threads = optimizer_threads;
      for (TheoremId t : cfg.theorems) {
        switch (t) {
          case TheoremId::wintgen:
            r.results.push_back(verify_wintgen(b, opt));
            break;
          case TheoremId::chen:
            for (const auto& tuple : cfg.tuples) r.results.push_back(verify_chen_delta(b, tuple, opt));
            break;
          case TheoremId::shape_ricci:
            for (int k : cfg.k_values) r.results.push_back(verify_shape_ricci(b, k, opt));
            break;
          case TheoremId::mean_scalar:
            r.results.push_back(verify_mean_scalar(b, opt));
            break;
          case TheoremId::casorati:
            for (double uu : cfg.u_values) r.results.push_back(verify_casorati(b, uu, opt));
            break;
        }
      }
    }
    if (mode.derivation && cfg.n >= 2) r.derivation = check_derivation(b);
  } catch (const OffManifoldError& e) {
    r.error = e.what();
    r.error_kind = "off-manifold";
  } catch (const DegenerateImmersionError& e) {
    r.error = e.what();
    r.error_kind = "degenerate-immersion";
  } catch (const EvaluationError& e) {
    r.error = e.what();
    r.error_kind = "evaluation";
  } catch (const ClassificationError& e) {
    throw ClassificationError(point_prefix(index, u) + e.what());
  } catch (const ArgumentError& e) {
    // Only the configured distributions can be rejected once the case validated.
    throw ClassificationError(point_prefix(index, u) + e.what());
  }
  return r;
}

std::vector<PointResult> run_sweep(const CompiledCase& c, SweepMode mode, int threads) {
  const auto points = grid_points(c.config);
  std::vector<PointResult> out(points.size());
  parallel_for(static_cast<int>(points.size()), threads, [&](int i) {
    out[i] = run_point(c, points[i], static_cast<std::size_t>(i), mode, 1);
  });
  return out;
}

}  // namespace mgeo
