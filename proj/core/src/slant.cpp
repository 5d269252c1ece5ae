#include "mgeo/slant.hpp"

#include <algorithm>
#include <cmath>

#include "mgeo/errors.hpp"

namespace mgeo {

double SlantData::vartheta(int i, const MetallicParams& params) const {
  const double th = i == 1 ? theta1 : theta2;
  const double tr = i == 1 ? tr_TP1 : tr_TP2;
  const int d = i == 1 ? d1 : d2;
  const double c = std::cos(th);
  return c * c * (params.p * tr + d * params.q);
}

Matrix to_frame_coords(const SubmanifoldPointData& pd, const Matrix& coord_vectors) {
  if (coord_vectors.rows() != pd.n) {
    throw ArgumentError("distribution vectors must have " + std::to_string(pd.n) + " entries");
  }
  return pd.coord_to_frame.partialPivLu().solve(coord_vectors);
}

namespace {

Matrix span_basis(const Matrix& v, const char* name) {
  if (v.cols() == 0) return v;
  try {
    return orthonormalize(v);
  } catch (const DegenerateBasisError&) {
    throw ClassificationError(std::string("distribution ") + name +
                              " has linearly dependent basis vectors");
  }
}

struct Side {
  double theta = 0.0;
  double dev = 0.0;
  double lemma = 0.0;
};

Side analyse(const Matrix& phi, const Matrix& T, const Matrix& B, const Matrix& P,
             const MetallicParams& mp) {
  Side s;
  const int d = static_cast<int>(B.cols());
  if (d == 0) return s;
  const Eigen::Index n = T.rows();
  std::vector<double> thetas;
  double mean_cos = 0.0;
  for (int a = 0; a < d; ++a) {
    Vector X = Vector::Zero(phi.rows());
    X.head(n) = B.col(a);
    const double c = std::min(1.0, (T * B.col(a)).norm() / (phi * X).norm());
    thetas.push_back(std::acos(c));
    mean_cos += c;
  }
  mean_cos /= d;
  s.theta = std::acos(std::min(1.0, mean_cos));
  for (double t : thetas) s.dev = std::max(s.dev, std::abs(t - s.theta));
  const double lam = mean_cos * mean_cos;
  const Matrix PT = P * T;
  for (int a = 0; a < d; ++a) {
    const Vector X = B.col(a);
    const Vector r = PT * (PT * X) - lam * (mp.p * (PT * X) + mp.q * X);
    s.lemma = std::max(s.lemma, r.norm());
  }
  return s;
}

}  // namespace

SlantData slant_analysis(const PhiDecomposition& phi, const MetallicParams& mp,
                         const std::optional<Matrix>& D1, const std::optional<Matrix>& D2) {
  const Matrix& T = phi.T;
  const int n = static_cast<int>(T.rows());
  const Matrix full = phi.full();
  SlantData s;

  Matrix B1 = D1 ? span_basis(*D1, "D1") : Matrix::Identity(n, n);
  Matrix B2;
  if (D2) {
    B2 = span_basis(*D2, "D2");
  } else if (B1.cols() < n) {
    B2 = extend_orthonormal(B1, Matrix::Identity(n, n), n).rightCols(n - B1.cols());
  } else {
    B2 = Matrix(n, 0);
  }
  if (B1.rows() != n || B2.rows() != n) {
    throw ArgumentError("distribution vectors must have " + std::to_string(n) + " entries");
  }
  if (B1.cols() > 0 && B2.cols() > 0) {
    const double overlap = max_abs(B1.transpose() * B2);
    if (overlap > 1e-8) {
      throw ArgumentError("distributions D1 and D2 are not orthogonal (max |<X1, X2>| = " +
                          std::to_string(overlap) + ")");
    }
  }
  if (B1.cols() + B2.cols() != n) {
    throw ClassificationError("distributions have dimensions " + std::to_string(B1.cols()) +
                              " + " + std::to_string(B2.cols()) + ", tangent space has " +
                              std::to_string(n));
  }
  if (B1.cols() == 0) {
    throw ClassificationError("distribution D1 is empty");
  }

  s.D1_basis = B1;
  s.D2_basis = B2;
  s.d1 = static_cast<int>(B1.cols());
  s.d2 = static_cast<int>(B2.cols());
  s.P1 = B1 * B1.transpose();
  s.P2 = B2 * B2.transpose();
  const Matrix I = Matrix::Identity(n, n);
  s.projector_residual = std::max({max_abs(s.P1 + s.P2 - I), max_abs(s.P1 * s.P2),
                                   max_abs(s.P1 * s.P1 - s.P1), max_abs(s.P2 * s.P2 - s.P2)});
  s.tr_T = T.trace();
  s.tr_TP1 = (T * s.P1).trace();
  s.tr_TP2 = (T * s.P2).trace();

  const Side a = analyse(full, T, B1, s.P1, mp);
  const Side b = analyse(full, T, B2, s.P2, mp);
  s.theta1 = a.theta;
  s.angle_dev1 = a.dev;
  s.lemma_residual_1 = a.lemma;
  s.theta2 = s.d2 == 0 ? a.theta : b.theta;
  s.angle_dev2 = b.dev;
  s.lemma_residual_2 = b.lemma;

  for (int i = 0; i < 2; ++i) {
    const Matrix& P = i == 0 ? s.P1 : s.P2;
    const double c = std::cos(i == 0 ? s.theta1 : s.theta2);
    for (int k = 0; k < n; ++k) {
      const Vector X = P.col(k);  // P e_k
      const double lhs = (T * X).squaredNorm();
      const double rhs = c * c * (mp.p * X.dot(T * X) + mp.q * X.squaredNorm());
      s.theta_residual = std::max(s.theta_residual, std::abs(lhs - rhs));
    }
  }
  return s;
}

}  // namespace mgeo
