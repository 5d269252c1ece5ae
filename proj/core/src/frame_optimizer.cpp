#include "mgeo/frame_optimizer.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mgeo/errors.hpp"
#include "mgeo/parallel.hpp"

namespace mgeo {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void rotate(Matrix& Q, int i, int j, double t) {
  const double c = std::cos(t), s = std::sin(t);
  const Vector qi = Q.col(i), qj = Q.col(j);
  Q.col(i) = c * qi + s * qj;
  Q.col(j) = -s * qi + c * qj;
}

}  // namespace

Matrix random_orthogonal(int n, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index + 1)));
  std::normal_distribution<double> N(0.0, 1.0);
  Matrix G(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) G(r, c) = N(rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  // Fix column signs so that Q does not depend on the QR implementation's choice.
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n; ++c) {
    if (R(c, c) < 0) Q.col(c) = -Q.col(c);
  }
  return Q;
}

double trig_poly_argmin(double a0, double a1, double b1, double a2, double b2) {
  const auto g = [&](double s) {
    return a0 + a1 * std::cos(s) + b1 * std::sin(s) + a2 * std::cos(2 * s) + b2 * std::sin(2 * s);
  };
  constexpr int kGrid = 64;
  const double h = 2.0 * std::numbers::pi / kGrid;
  int best = 0;
  double best_v = g(0.0);
  for (int k = 1; k < kGrid; ++k) {
    const double v = g(k * h);
    if (v < best_v) {
      best_v = v;
      best = k;
    }
  }
  double lo = (best - 1) * h, hi = (best + 1) * h;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = g(x2);
    }
  }
  const double s = 0.5 * (lo + hi);
  return g(s) <= best_v ? s : best * h;
}

double descend(const FrameObjective& obj, Matrix& Q, int max_sweeps) {
  double f = obj.value(Q);
  constexpr int kSamples = 8;
  const double pi = std::numbers::pi;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double start = f;
    for (const auto& [i, j] : obj.planes) {
      double samples[kSamples];
      samples[0] = f;
      for (int k = 1; k < kSamples; ++k) {
        Matrix Qk = Q;
        rotate(Qk, i, j, k * pi / kSamples);
        samples[k] = obj.value(Qk);
      }
      // f(t) has period pi; in s = 2t the samples sit at s_k = k * 2pi / 8.
      double a0 = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0;
      for (int k = 0; k < kSamples; ++k) {
        const double s = 2.0 * pi * k / kSamples;
        a0 += samples[k];
        a1 += samples[k] * std::cos(s);
        b1 += samples[k] * std::sin(s);
        a2 += samples[k] * std::cos(2 * s);
        b2 += samples[k] * std::sin(2 * s);
      }
      a0 /= kSamples;
      a1 *= 2.0 / kSamples;
      b1 *= 2.0 / kSamples;
      a2 *= 2.0 / kSamples;
      b2 *= 2.0 / kSamples;
      const double t = 0.5 * trig_poly_argmin(a0, a1, b1, a2, b2);
      Matrix Qn = Q;
      rotate(Qn, i, j, t);
      const double fn = obj.value(Qn);
      if (fn < f) {
        Q = std::move(Qn);
        f = fn;
      }
    }
    if (start - f <= 1e-14 * std::max(1.0, std::abs(f))) break;
  }
  return f;
}

OptimumCertificate minimize_frames(const FrameObjective& obj, const OptimizerOptions& opt) {
  if (obj.n < 1 || !obj.value) throw ArgumentError("frame objective is empty");
  if (opt.restarts < 0) throw ArgumentError("restart count must be non-negative");
  const int seeds = static_cast<int>(obj.seeds.size());
  const int total = seeds + opt.restarts;
  if (total == 0) throw ArgumentError("optimizer needs at least one start");
  std::vector<double> values(total);
  std::vector<Matrix> frames(total);
  parallel_for(total, opt.threads, [&](int s) {
    Matrix Q = s < seeds ? obj.seeds[s]
                         : random_orthogonal(obj.n, opt.seed, static_cast<std::uint64_t>(s - seeds));
    values[s] = descend(obj, Q, opt.max_sweeps);
    frames[s] = std::move(Q);
  });
  int best = 0;
  for (int s = 1; s < total; ++s) {
    if (values[s] < values[best]) best = s;
  }
  OptimumCertificate cert;
  cert.value = values[best];
  cert.frame = frames[best];
  cert.starts = total;
  const double tol = opt.agree_tol * std::max(1.0, std::abs(cert.value));
  for (double v : values) {
    if (v - cert.value <= tol) ++cert.agreeing;
  }
  return cert;
}

OptimumCertificate maximize_frames(const FrameObjective& obj, const OptimizerOptions& opt) {
  FrameObjective neg = obj;
  const auto f = obj.value;
  neg.value = [f](const Matrix& Q) { return -f(Q); };
  OptimumCertificate cert = minimize_frames(neg, opt);
  cert.value = -cert.value;
  return cert;
}

}  // namespace mgeo
