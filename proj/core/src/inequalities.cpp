#include "mgeo/inequalities.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "mgeo/errors.hpp"

namespace mgeo {

const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::wintgen: return "wintgen";
    case TheoremId::chen: return "chen";
    case TheoremId::shape_ricci: return "shape-ricci";
    case TheoremId::mean_scalar: return "mean-scalar";
    case TheoremId::casorati: return "casorati";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (TheoremId t : kAllTheorems)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

const char* to_string(Tr2Reading r) {
  return r == Tr2Reading::outer ? "outer" : "trace-of-square";
}

TraceData trace_data(const Matrix& T, const SlantData& slant) {
  TraceData d;
  d.tr_T = T.trace();
  d.tr_T_outer = d.tr_T * d.tr_T;
  d.tr_T2 = (T * T).trace();
  d.tr_TP1 = slant.tr_TP1;
  d.tr_TP2 = slant.tr_TP2;
  d.norm_T_sq = T.squaredNorm();
  return d;
}

ShapeRicciConstants shape_ricci_constants(const AmbientConstants& amb, Sign s,
                                          const TraceData& tr, Tr2Reading reading) {
  const double n = amb.n, p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double K = amb.K(), D = amb.D(s);
  ShapeRicciConstants w;
  w.omega1 = p * (n - 1) * D / (2 * al) - (n - 1) * K * (p * p + 2 * q) / (2 * al * al);
  w.omega2 = (n - 1) / (2 * al * al) * (p * K + al * D);
  w.omega3 = (p * K - al * D) / (2 * al * al);
  w.omega = n * w.omega1 + ((n - 1) * w.omega3 - w.omega2) * tr.tr_T -
            n * (n - 1) * K / (al * al) * tr.tr2(reading);
  return w;
}

double ambient_2tau_closed_form(const AmbientConstants& amb, Sign s, const TraceData& tr,
                          Tr2Reading reading, double vartheta) {
  const double n = amb.n, p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double K = amb.K(), D = amb.D(s);
  return n * (n - 1) * K / (2 * al * al) * (p * p + 2 * q) +
         K / (al * al) * ((n - 1) * (n * tr.tr2(reading) - p * tr.tr_T) - vartheta) +
         (n - 1) * D / (2 * al) * (2 * tr.tr_T - n * p);
}

double ambient_2tau_exact(const AmbientConstants& amb, Sign s, const TraceData& tr) {
  const double n = amb.n, p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double K = amb.K(), D = amb.D(s);
  return n * (n - 1) * K / (2 * al * al) * (p * p + 2 * q) +
         K / (al * al) * (tr.tr_T_outer - tr.norm_T_sq - p * (n - 1) * tr.tr_T) +
         (n - 1) * D / (2 * al) * (2 * tr.tr_T - n * p);
}

double implied_tr2(const AmbientConstants& amb, const TraceData& tr, double vartheta) {
  if (amb.K() == 0.0 || amb.n < 2) return std::numeric_limits<double>::quiet_NaN();
  // Solve (n-1) n x - vartheta = (tr T)^2 - |T|^2 for x.
  return (tr.tr_T_outer - tr.norm_T_sq + vartheta) / (amb.n * (amb.n - 1.0));
}

namespace rhs {

double wintgen(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
               double vartheta, double rho, double rho_perp) {
  const double n = amb.n, p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double K = amb.K(), D = amb.D(s);
  return rho + rho_perp - K / (2 * al * al) * (p * p + 2 * q) +
         K / (n * al * al * (n - 1)) *
             ((n - 1) * (p * tr.tr_T - n * tr.tr2(reading)) + vartheta) +
         D / (2 * n * al) * (n * p - 2 * tr.tr_T);
}

double chen(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
            double vartheta, const ChenConstants& cst, int k, double H_sq) {
  const double p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double K = amb.K(), D = amb.D(s);
  return K / (2 * al * al) *
             (cst.b * (p * p + 2 * q + 2 * tr.tr2(reading)) - cst.d * p * tr.tr_T +
              (k - 1) * vartheta) +
         D / (4 * al) * (2 * tr.tr_T * cst.d - p * cst.b) + cst.c * H_sq;
}

double shape_ricci(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                   double vartheta, double omega_k) {
  const double n = amb.n, al = amb.params.alpha;
  const ShapeRicciConstants w = shape_ricci_constants(amb, s, tr, reading);
  return n * (n - 1) * omega_k + w.omega + amb.K() / (al * al) * vartheta;
}

double mean_scalar(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                   double vartheta, double tau) {
  return 2 * tau - ambient_2tau_closed_form(amb, s, tr, reading, vartheta);
}

double casorati(const AmbientConstants& amb, Sign s, const TraceData& tr, Tr2Reading reading,
                double vartheta, double delta_c) {
  return delta_c + ambient_2tau_closed_form(amb, s, tr, reading, vartheta);
}

}  // namespace rhs

PointBundle make_bundle(const ImmersionSpec& spec, const SubmanifoldPointData& pd,
                        const std::optional<Matrix>& D1, const std::optional<Matrix>& D2) {
  const ProductSpaceForm& sp = spec.space;
  const PhiDecomposition phi = phi_decompose(spec, pd);
  SlantData slant = slant_analysis(phi, sp.params(), D1, D2);
  AmbientConstants amb{pd.n, sp.c1(), sp.c2(), sp.params()};
  return make_bundle(amb, sp.curv_sign(), geometry_at(spec, pd), phi.T, std::move(slant));
}

PointBundle make_bundle(const AmbientConstants& amb, Sign sign, PointGeometry geom, Matrix T,
                        SlantData slant) {
  if (geom.n != amb.n || T.rows() != amb.n || T.cols() != amb.n) {
    throw ArgumentError("point bundle dimensions disagree");
  }
  PointBundle b{amb, sign, std::move(geom), std::move(T), std::move(slant), {}};
  b.traces = trace_data(b.T, b.slant);
  return b;
}

namespace {

using RhsFn = std::function<double(Sign, Tr2Reading)>;

// lower_bound: the theorem bounds the LHS from below (slack = lhs - rhs).
InequalityResult finish(const PointBundle& b, const VerifyOptions& opt, TheoremId id,
                        std::string label, double lhs, const RhsFn& rhs, bool lower_bound) {
  const auto slack_of = [&](double r) { return lower_bound ? lhs - r : r - lhs; };
  InequalityResult res;
  res.theorem = id;
  res.label = std::move(label);
  res.lhs = lhs;
  res.rhs = rhs(b.sign, opt.reading);
  res.slack = slack_of(res.rhs);
  res.eq_tol = opt.eq_tol;
  res.holds = res.slack >= -opt.eq_tol;
  res.equality = std::abs(res.slack) <= opt.eq_tol;
  res.reading = opt.reading;
  res.sign = b.sign;
  if (b.amb.c1 != b.amb.c2) res.opposite_sign_slack = slack_of(rhs(opposite(b.sign), opt.reading));
  const Tr2Reading other =
      opt.reading == Tr2Reading::outer ? Tr2Reading::trace_of_square : Tr2Reading::outer;
  res.other_reading_slack = slack_of(rhs(b.sign, other));
  return res;
}

std::string tuple_label(const std::vector<int>& tuple) {
  std::ostringstream os;
  os << "tuple=(";
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ")";
  return os.str();
}

std::string number_label(const char* name, double v) {
  std::ostringstream os;
  os.precision(17);
  os << name << "=" << v;
  return os.str();
}

}  // namespace

InequalityResult verify_wintgen(const PointBundle& b, const VerifyOptions& opt) {
  const double rho = normalized_scalar_curvature(b.geom);
  const double rho_perp = normal_scalar_curvature(b.geom.Rperp);
  const double vt = b.vartheta();
  InequalityResult r = finish(
      b, opt, TheoremId::wintgen, "", b.geom.H_sq,
      [&](Sign s, Tr2Reading rd) { return rhs::wintgen(b.amb, s, b.traces, rd, vt, rho, rho_perp); },
      true);
  r.details = {{"rho", rho}, {"rho_perp", rho_perp}, {"vartheta", vt}};
  r.equality_case = wintgen_pattern(b.geom.shape_ops);
  return r;
}

InequalityResult verify_chen_delta(const PointBundle& b, const std::vector<int>& tuple,
                                   const VerifyOptions& opt) {
  const ChenDeltaData d = chen_delta(b.geom, tuple, opt.optimizer);
  const double vt = b.vartheta();
  const int k = static_cast<int>(tuple.size());
  InequalityResult r = finish(
      b, opt, TheoremId::chen, tuple_label(tuple), d.delta,
      [&](Sign s, Tr2Reading rd) {
        return rhs::chen(b.amb, s, b.traces, rd, vt, d.constants, k, b.geom.H_sq);
      },
      false);
  r.details = {{"tau", d.tau},
               {"inf_partial_sum", d.inf_sum},
               {"b", d.constants.b},
               {"c", d.constants.c},
               {"d", d.constants.d},
               {"starts", static_cast<double>(d.inf_cert.starts)},
               {"agreeing", static_cast<double>(d.inf_cert.agreeing)}};
  r.equality_case = chen_pattern(b.geom.shape_ops, b.geom.H, d.inf_cert.frame, tuple);
  return r;
}

InequalityResult verify_shape_ricci(const PointBundle& b, int k, const VerifyOptions& opt) {
  const OmegaData om = omega_k(b.geom, k, opt.optimizer);
  const int n = b.geom.n;
  double lhs = 0.0;
  const double h = b.geom.H.norm();
  if (h > 0.0) {
    Matrix A = Matrix::Zero(n, n);
    for (std::size_t r = 0; r < b.geom.shape_ops.size(); ++r)
      A += (b.geom.H(static_cast<Eigen::Index>(r)) / h) * b.geom.shape_ops[r];
    lhs = A.trace() * A.trace();
  }
  const double vt = b.vartheta();
  InequalityResult r = finish(
      b, opt, TheoremId::shape_ricci, "k=" + std::to_string(k), lhs,
      [&](Sign s, Tr2Reading rd) { return rhs::shape_ricci(b.amb, s, b.traces, rd, vt, om.omega_k); },
      true);
  const ShapeRicciConstants w = shape_ricci_constants(b.amb, b.sign, b.traces, opt.reading);
  r.details = {{"omega_k", om.omega_k}, {"omega", w.omega},   {"omega1", w.omega1},
               {"omega2", w.omega2},    {"omega3", w.omega3}, {"vartheta", vt},
               {"sup_ricci", om.sup_ricci}};
  r.equality_case = shape_ricci_pattern(b.geom.shape_ops, b.geom.H, om);
  return r;
}

InequalityResult verify_mean_scalar(const PointBundle& b, const VerifyOptions& opt) {
  const int n = b.geom.n;
  const double tau = scalar_curvature(b.geom);
  const double vt = b.vartheta();
  InequalityResult r = finish(
      b, opt, TheoremId::mean_scalar, "", n * (n - 1.0) * b.geom.H_sq,
      [&](Sign s, Tr2Reading rd) { return rhs::mean_scalar(b.amb, s, b.traces, rd, vt, tau); },
      true);
  r.details = {{"tau", tau}, {"vartheta", vt}};
  r.equality_case = umbilical_pattern(b.geom.shape_ops);
  return r;
}

InequalityResult verify_casorati(const PointBundle& b, double u, const VerifyOptions& opt) {
  const CasoratiData c = delta_casorati(b.geom.shape_ops, u, opt.optimizer);
  const double tau = scalar_curvature(b.geom);
  const double vt = b.vartheta();
  const double dc = c.value();
  InequalityResult r = finish(
      b, opt, TheoremId::casorati, number_label("u", u), 2 * tau,
      [&](Sign s, Tr2Reading rd) { return rhs::casorati(b.amb, s, b.traces, rd, vt, dc); }, false);
  r.details = {{"C", c.C},
               {"a_u", c.a_u},
               {c.sup_branch() ? "sup_C_W" : "inf_C_W", c.sup_branch() ? c.C_W_sup : c.C_W_inf},
               {c.sup_branch() ? "delta_C_hat" : "delta_C", dc}};
  r.equality_case = casorati_pattern(b.geom.shape_ops, u);
  return r;
}

std::vector<std::size_t> DerivationCheck::matching(double tol) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (std::abs(rows[i].residual) <= tol) out.push_back(i);
  return out;
}

DerivationCheck check_derivation(const PointBundle& b) {
  const PointGeometry& g = b.geom;
  const int n = g.n;
  DerivationCheck c;
  c.tau_direct_2 = 2 * scalar_curvature(g);
  for (const Matrix& A : g.shape_ops)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) c.extrinsic += 2 * (A(i, i) * A(j, j) - A(i, j) * A(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) c.ambient_direct += g.ambient(i, j, j, i);
  c.ambient_exact = ambient_2tau_exact(b.amb, b.sign, b.traces);
  const double vt = b.vartheta();
  for (Tr2Reading rd : {Tr2Reading::outer, Tr2Reading::trace_of_square})
    for (Sign s : {Sign::plus, Sign::minus}) {
      const double assembled = ambient_2tau_closed_form(b.amb, s, b.traces, rd, vt) + c.extrinsic;
      c.rows.push_back({rd, s, assembled - c.tau_direct_2});
    }
  c.implied_tr2 = implied_tr2(b.amb, b.traces, vt);
  return c;
}

}  // namespace mgeo
