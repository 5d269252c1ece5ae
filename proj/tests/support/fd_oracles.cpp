#include "fd_oracles.hpp"

namespace mgeo::testing {

namespace {

double block_dot(const ProductSpaceForm& space, int i, const Vector& a, const Vector& b) {
  return a.segment(space.offset(i), space.block_size(i)).dot(b.segment(space.offset(i), space.block_size(i)));
}

struct Derivs {
  Vector f;
  Matrix J;                // E x n
  std::vector<Vector> d2;  // i*n+j
};

Derivs derivs(const ImmersionSpec& spec, const std::vector<double>& u) {
  const ImmersionJet jet = jet2(spec, u);
  Derivs d{jet.value, jet.d1, {}};
  const int n = spec.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.d2.push_back(jet.second(i, j));
  return d;
}

// Christoffel symbols Gamma^l_ij = g^lm <f_ij, f_m>, index (l, i, j).
std::vector<double> christoffel(const ImmersionSpec& spec, const std::vector<double>& u) {
  const int n = spec.n;
  const Derivs d = derivs(spec, u);
  const Matrix g = d.J.transpose() * d.J;
  const Matrix ginv = g.inverse();
  std::vector<double> G(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector first_kind = d.J.transpose() * d.d2[i * n + j];
      const Vector second_kind = ginv * first_kind;
      for (int l = 0; l < n; ++l) G[(l * n + i) * n + j] = second_kind(l);
    }
  return G;
}

std::vector<double> shifted(const std::vector<double>& u, int k, double h) {
  std::vector<double> v = u;
  v[k] += h;
  return v;
}

}  // namespace

double product_curvature(const ProductSpaceForm& space, const Vector& X, const Vector& Y,
                         const Vector& Z, const Vector& W) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i) {
    r += space.curvature(i) * (block_dot(space, i, Y, Z) * block_dot(space, i, X, W) -
                               block_dot(space, i, X, Z) * block_dot(space, i, Y, W));
  }
  return r;
}

Matrix ambient_tangent_projector(const ProductSpaceForm& space, const Vector& x) {
  const int E = space.embedding_dim();
  Matrix P = Matrix::Identity(E, E);
  for (int i = 0; i < 2; ++i) {
    if (space.factor(i).kind != FactorKind::sphere) continue;
    const Vector xi = x.segment(space.offset(i), space.block_size(i)).normalized();
    P.block(space.offset(i), space.offset(i), space.block_size(i), space.block_size(i)) -=
        xi * xi.transpose();
  }
  return P;
}

GaussOracle gauss_oracle(const ImmersionSpec& spec, const std::vector<double>& u,
                         const Matrix& C, double step) {
  const int n = spec.n;
  GaussOracle out;
  out.n = n;
  out.frame_coords = C;

  const Derivs d = derivs(spec, u);
  const Matrix g = d.J.transpose() * d.J;
  const std::vector<double> G = christoffel(spec, u);
  std::vector<std::vector<double>> dG(n);
  for (int k = 0; k < n; ++k) {
    const auto plus = christoffel(spec, shifted(u, k, step));
    const auto minus = christoffel(spec, shifted(u, k, -step));
    dG[k].resize(plus.size());
    for (std::size_t m = 0; m < plus.size(); ++m) dG[k][m] = (plus[m] - minus[m]) / (2.0 * step);
  }
  const auto Gam = [&](int l, int i, int j) { return G[(l * n + i) * n + j]; };
  const auto dGam = [&](int k, int l, int i, int j) { return dG[k][(l * n + i) * n + j]; };

  // R_ijkl = g(R(d_i, d_j) d_k, d_l) in coordinates.
  Tensor4 Rc(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vector up(n);
        for (int l = 0; l < n; ++l) {
          double v = dGam(i, l, j, k) - dGam(j, l, i, k);
          for (int m = 0; m < n; ++m) v += Gam(l, i, m) * Gam(m, j, k) - Gam(l, j, m) * Gam(m, i, k);
          up(l) = v;
        }
        const Vector down = g * up;
        for (int l = 0; l < n; ++l) Rc(i, j, k, l) = down(l);
      }
  out.intrinsic = Tensor4(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          double v = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) v += C(i, a) * C(j, b) * C(k, c) * C(l, e) * Rc(i, j, k, l);
          out.intrinsic(a, b, c, e) = v;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) out.intrinsic_tau += 0.5 * out.intrinsic(a, b, b, a);

  // Second fundamental form: component of the second derivative tangent to M and
  // normal to N.
  const Matrix PM = ambient_tangent_projector(spec.space, d.f);
  const Matrix E = d.J * C;  // orthonormal tangent frame
  const Matrix PN = PM - E * E.transpose();
  out.h.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector v = Vector::Zero(d.f.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v += C(i, a) * C(j, b) * d.d2[i * n + j];
      out.h[a * n + b] = PN * v;
    }
  out.extrinsic = Tensor4(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          out.extrinsic(a, b, c, e) =
              product_curvature(spec.space, E.col(a), E.col(b), E.col(c), E.col(e)) +
              out.h[a * n + e].dot(out.h[b * n + c]) - out.h[a * n + c].dot(out.h[b * n + e]);
        }
  return out;
}

double contract(const Tensor4& R, const Vector& X, const Vector& Y, const Vector& Z,
                const Vector& W) {
  const int n = R.dim();
  double v = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) v += X(a) * Y(b) * Z(c) * W(d) * R(a, b, c, d);
  return v;
}

namespace {

// Smooth normal frame near u: project the reference normals and orthonormalize.
Matrix normal_frame_at(const ImmersionSpec& spec, const std::vector<double>& v, const Matrix& ref) {
  const Derivs d = derivs(spec, v);
  const Matrix PM = ambient_tangent_projector(spec.space, d.f);
  const Matrix g = d.J.transpose() * d.J;
  const Matrix PT = d.J * g.inverse() * d.J.transpose();
  Matrix N = (PM - PT) * ref;
  for (int t = 0; t < N.cols(); ++t) {
    for (int s = 0; s < t; ++s) N.col(t) -= N.col(s).dot(N.col(t)) * N.col(s);
    N.col(t).normalize();
  }
  return N;
}

// omega(k)(t, s) = <d_k nu_t, nu_s> at v.
std::vector<Matrix> connection_forms(const ImmersionSpec& spec, const std::vector<double>& v,
                                     const Matrix& ref, double h) {
  const Matrix N0 = normal_frame_at(spec, v, ref);
  std::vector<Matrix> w;
  for (int k = 0; k < spec.n; ++k) {
    const Matrix dN = (normal_frame_at(spec, shifted(v, k, h), ref) -
                       normal_frame_at(spec, shifted(v, k, -h), ref)) / (2.0 * h);
    w.push_back(dN.transpose() * N0);
  }
  return w;
}

}  // namespace

NormalCurvature normal_connection_oracle(const ImmersionSpec& spec, const std::vector<double>& u,
                                         const Matrix& C, const Matrix& normal_frame,
                                         double step) {
  const int n = spec.n;
  const int k = static_cast<int>(normal_frame.cols());
  const auto w = connection_forms(spec, u, normal_frame, step);
  std::vector<std::vector<Matrix>> dw(n);  // dw[i][j] = d_i omega(j)
  for (int i = 0; i < n; ++i) {
    const auto plus = connection_forms(spec, shifted(u, i, step), normal_frame, step);
    const auto minus = connection_forms(spec, shifted(u, i, -step), normal_frame, step);
    for (int j = 0; j < n; ++j) dw[i].push_back((plus[j] - minus[j]) / (2.0 * step));
  }
  // Coefficient of nu_r in R(d_i, d_j) nu_t.
  std::vector<Matrix> coord(n * n, Matrix::Zero(k, k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix& M = coord[i * n + j];
      for (int t = 0; t < k; ++t)
        for (int r = 0; r < k; ++r) {
          double v = dw[i][j](t, r) - dw[j][i](t, r);
          for (int s = 0; s < k; ++s) v += w[j](t, s) * w[i](s, r) - w[i](t, s) * w[j](s, r);
          M(t, r) = v;
        }
    }
  NormalCurvature out(n, k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < k; ++t)
        for (int r = 0; r < k; ++r) {
          double v = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v += C(i, a) * C(j, b) * coord[i * n + j](t, r);
          out(a, b, t, r) = v;
        }
  return out;
}

}  // namespace mgeo::testing
