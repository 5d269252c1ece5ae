#include "mgeo/corollaries.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mgeo/errors.hpp"

namespace mgeo {

const char* to_string(SubmanifoldType t) {
  switch (t) {
    case SubmanifoldType::semi_slant: return "semi-slant";
    case SubmanifoldType::hemi_slant: return "hemi-slant";
    case SubmanifoldType::semi_invariant: return "semi-invariant";
    case SubmanifoldType::slant: return "slant";
  }
  return "?";
}

std::optional<SubmanifoldType> parse_submanifold_type(std::string_view name) {
  for (SubmanifoldType t : kAllTypes)
    if (name == to_string(t)) return t;
  return std::nullopt;
}

std::pair<double, double> class_angles(SubmanifoldType t, double theta) {
  constexpr double half_pi = std::numbers::pi / 2;
  switch (t) {
    case SubmanifoldType::semi_slant: return {0.0, theta};
    case SubmanifoldType::hemi_slant: return {theta, half_pi};
    case SubmanifoldType::semi_invariant: return {0.0, half_pi};
    case SubmanifoldType::slant: return {theta, theta};
  }
  return {theta, theta};
}

namespace {

void expect_angle(const char* type, const char* which, double got, double want) {
  if (std::abs(got - want) > kSlantAngleTol) {
    std::ostringstream os;
    os.precision(10);
    os << type << " requires " << which << " = " << want << " rad, found " << got;
    throw ClassificationError(os.str());
  }
}

}  // namespace

double check_class(const SlantData& sd, SubmanifoldType t) {
  const char* name = to_string(t);
  if (!sd.slant1()) {
    throw ClassificationError(std::string(name) + ": D1 is not slant (theta1 spread " +
                              std::to_string(sd.angle_dev1) + ")");
  }
  if (!sd.slant2()) {
    throw ClassificationError(std::string(name) + ": D2 is not slant (theta2 spread " +
                              std::to_string(sd.angle_dev2) + ")");
  }
  constexpr double half_pi = std::numbers::pi / 2;
  switch (t) {
    case SubmanifoldType::semi_slant:
      expect_angle(name, "theta1", sd.theta1, 0.0);
      return sd.theta2;
    case SubmanifoldType::hemi_slant:
      if (sd.d2 == 0) throw ClassificationError("hemi-slant: D2 is empty");
      expect_angle(name, "theta2", sd.theta2, half_pi);
      return sd.theta1;
    case SubmanifoldType::semi_invariant:
      if (sd.d2 == 0) throw ClassificationError("semi-invariant: D2 is empty");
      expect_angle(name, "theta1", sd.theta1, 0.0);
      expect_angle(name, "theta2", sd.theta2, half_pi);
      return 0.0;
    case SubmanifoldType::slant:
      if (sd.d2 > 0) expect_angle(name, "theta2", sd.theta2, sd.theta1);
      return sd.theta1;
  }
  return 0.0;
}

namespace {

// The bracketed trace block of each tabulated row.
double row_block(SubmanifoldType t, double p, double q, double theta, const TheoremInputs& in) {
  const double c2 = std::cos(theta) * std::cos(theta);
  const double n = in.d1 + in.d2;
  switch (t) {
    case SubmanifoldType::semi_slant:
      return p * in.traces.tr_TP1 + in.d1 * q + c2 * (p * in.traces.tr_TP2 + in.d2 * q);
    case SubmanifoldType::hemi_slant:
      return c2 * (p * in.traces.tr_TP1 + in.d1 * q);
    case SubmanifoldType::semi_invariant:
      return p * in.traces.tr_TP1 + in.d1 * q;
    case SubmanifoldType::slant:
      return c2 * (p * in.traces.tr_T + n * q);
  }
  return 0.0;
}

// Tabulated rows, transcribed separately from the bi-slant right-hand sides.
double table_row(TheoremId thm, const AmbientConstants& amb, Sign s, Tr2Reading reading,
                 double block, const TheoremInputs& in) {
  const double n = amb.n, p = amb.params.p, q = amb.params.q, al = amb.params.alpha;
  const double c1 = amb.c1, c2 = amb.c2;
  const double sg = to_double(s);
  const double trphi = in.traces.tr_T, tr2phi = in.traces.tr2(reading);
  switch (thm) {
    case TheoremId::wintgen:
      return in.rho + in.rho_perp - (c1 + c2) / (2 * al * al) * (p * p + 2 * q) +
             (c1 + c2) / (n * al * al * (n - 1)) * ((n - 1) * (p * trphi - n * tr2phi) + block) +
             sg * (c1 - c2) / (2 * al * n) * (n * p - 2 * trphi);
    case TheoremId::chen: {
      const double b = in.chen.b, c = in.chen.c, d = in.chen.d;
      return (c1 + c2) / (2 * al * al) *
                 (b * (p * p + 2 * q + 2 * tr2phi) - d * p * trphi + (in.chen_k - 1) * block) +
             sg * (c1 - c2) / (4 * al) * (2 * trphi * d - p * b) + c * in.H_sq;
    }
    case TheoremId::shape_ricci: {
      const double w1 = p * (n - 1) * sg * (c1 - c2) / (2 * al) -
                        (n - 1) * (c1 + c2) * (p * p + 2 * q) / (2 * al * al);
      const double w2 = (n - 1) / (2 * al * al) * (p * (c1 + c2) + al * sg * (c1 - c2));
      const double w3 = (p * (c1 + c2) - al * sg * (c1 - c2)) / (2 * al * al);
      const double w = n * w1 + ((n - 1) * w3 - w2) * trphi -
                       n * (n - 1) * (c1 + c2) / (al * al) * tr2phi;
      return n * (n - 1) * in.omega_k + w + (c1 + c2) / (al * al) * block;
    }
    case TheoremId::mean_scalar:
      return 2 * in.tau - n * (n - 1) * (c1 + c2) / (2 * al * al) * (p * p + 2 * q) +
             (c1 + c2) / (al * al) * (block - (n - 1) * (n * tr2phi - p * trphi)) -
             (n - 1) * sg * (c1 - c2) / (2 * al) * (2 * trphi - n * p);
    case TheoremId::casorati:
      return in.delta_c + n * (n - 1) * (c1 + c2) / (2 * al * al) * (p * p + 2 * q) +
             (c1 + c2) / (al * al) * ((n - 1) * (n * tr2phi - p * trphi) - block) +
             (n - 1) * sg * (c1 - c2) / (2 * al) * (2 * trphi - n * p);
  }
  return 0.0;
}

double bislant_rhs(TheoremId thm, const AmbientConstants& amb, Sign s, Tr2Reading reading,
                   double vartheta, const TheoremInputs& in) {
  switch (thm) {
    case TheoremId::wintgen:
      return rhs::wintgen(amb, s, in.traces, reading, vartheta, in.rho, in.rho_perp);
    case TheoremId::chen:
      return rhs::chen(amb, s, in.traces, reading, vartheta, in.chen, in.chen_k, in.H_sq);
    case TheoremId::shape_ricci:
      return rhs::shape_ricci(amb, s, in.traces, reading, vartheta, in.omega_k);
    case TheoremId::mean_scalar:
      return rhs::mean_scalar(amb, s, in.traces, reading, vartheta, in.tau);
    case TheoremId::casorati:
      return rhs::casorati(amb, s, in.traces, reading, vartheta, in.delta_c);
  }
  return 0.0;
}

}  // namespace

Specialization specialize(TheoremId thm, SubmanifoldType type, const AmbientConstants& amb,
                          Sign s, Tr2Reading reading, double theta, const TheoremInputs& in) {
  const double p = amb.params.p, q = amb.params.q;
  const auto [t1, t2] = class_angles(type, theta);
  const double vt = std::pow(std::cos(t1), 2) * (p * in.traces.tr_TP1 + in.d1 * q) +
                    std::pow(std::cos(t2), 2) * (p * in.traces.tr_TP2 + in.d2 * q);
  Specialization out;
  out.bislant = bislant_rhs(thm, amb, s, reading, vt, in);
  out.table = table_row(thm, amb, s, reading, row_block(type, p, q, theta, in), in);
  out.difference = out.table - out.bislant;
  return out;
}

Specialization specialize(TheoremId thm, SubmanifoldType type, const PointBundle& b,
                          const TheoremInputs& in, Tr2Reading reading) {
  const double theta = check_class(b.slant, type);
  TheoremInputs full = in;
  full.traces = b.traces;
  full.d1 = b.slant.d1;
  full.d2 = b.slant.d2;
  return specialize(thm, type, b.amb, b.sign, reading, theta, full);
}

}  // namespace mgeo
