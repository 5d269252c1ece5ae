#pragma once

// Truncated second-order Taylor numbers: value, gradient and (symmetric) Hessian
// with respect to up to kMaxParams independent variables.

#include <array>
#include <cmath>

namespace mgeo {

inline constexpr int kMaxParams = 8;

struct Jet2 {
  static constexpr int kHess = kMaxParams * (kMaxParams + 1) / 2;

  int n = 0;
  double v = 0.0;
  std::array<double, kMaxParams> g{};
  std::array<double, kHess> h{};  ///< packed upper triangle, see hidx

  static constexpr int hidx(int i, int j) {
    return i <= j ? j * (j + 1) / 2 + i : i * (i + 1) / 2 + j;
  }
  double hess(int i, int j) const { return h[hidx(i, j)]; }

  static Jet2 constant(int n, double value) {
    Jet2 r;
    r.n = n;
    r.v = value;
    return r;
  }
  static Jet2 variable(int n, int i, double value) {
    Jet2 r = constant(n, value);
    r.g[i] = 1.0;
    return r;
  }
};

/// f(a) given f, f', f'' at a.v.
inline Jet2 chain(const Jet2& a, double f, double df, double ddf) {
  Jet2 r;
  r.n = a.n;
  r.v = f;
  for (int i = 0; i < a.n; ++i) r.g[i] = df * a.g[i];
  for (int j = 0; j < a.n; ++j)
    for (int i = 0; i <= j; ++i) {
      const int k = Jet2::hidx(i, j);
      r.h[k] = df * a.h[k] + ddf * a.g[i] * a.g[j];
    }
  return r;
}

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  r.v += b.v;
  for (int i = 0; i < a.n; ++i) r.g[i] += b.g[i];
  for (int k = 0; k < Jet2::kHess; ++k) r.h[k] += b.h[k];
  return r;
}

inline Jet2 operator-(const Jet2& a) {
  Jet2 r = a;
  r.v = -r.v;
  for (double& x : r.g) x = -x;
  for (double& x : r.h) x = -x;
  return r;
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r;
  r.n = a.n;
  r.v = a.v * b.v;
  for (int i = 0; i < a.n; ++i) r.g[i] = a.v * b.g[i] + b.v * a.g[i];
  for (int j = 0; j < a.n; ++j)
    for (int i = 0; i <= j; ++i) {
      const int k = Jet2::hidx(i, j);
      r.h[k] = a.v * b.h[k] + b.v * a.h[k] + a.g[i] * b.g[j] + a.g[j] * b.g[i];
    }
  return r;
}

inline Jet2 reciprocal(const Jet2& a) {
  const double x = a.v;
  return chain(a, 1.0 / x, -1.0 / (x * x), 2.0 / (x * x * x));
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v);
  return chain(a, s, std::cos(a.v), -s);
}
inline Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.v);
  return chain(a, c, -std::sin(a.v), -c);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e, e);
}
/// Caller guarantees a.v > 0.
inline Jet2 sqrt(const Jet2& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}
inline Jet2 ipow(const Jet2& a, int k) {
  if (k == 0) return Jet2::constant(a.n, 1.0);
  if (k == 1) return a;
  const double x = a.v;
  return chain(a, std::pow(x, k), k * std::pow(x, k - 1), k * (k - 1.0) * std::pow(x, k - 2));
}

}  // namespace mgeo
