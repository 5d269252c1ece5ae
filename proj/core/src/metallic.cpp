#include "mgeo/metallic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mgeo/errors.hpp"

namespace mgeo {

MetallicParams metallic_constants(int p, int q) {
  if (p < 1 || q < 1) {
    throw DomainError("metallic constants need positive integers p, q (got p=" +
                      std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
  MetallicParams mp;
  mp.p = p;
  mp.q = q;
  mp.alpha = std::sqrt(static_cast<double>(p) * p + 4.0 * q);
  mp.sigma = 0.5 * (p + mp.alpha);
  return mp;
}

const char* to_string(Branch b) { return b == Branch::first ? "first" : "second"; }
const char* to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

InnerProduct::InnerProduct(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols() || gram_.rows() == 0) {
    throw ArgumentError("inner product needs a non-empty square Gram matrix");
  }
  if (!gram_.allFinite()) throw ArgumentError("inner product has non-finite entries");
  if (max_abs(gram_ - gram_.transpose()) > 1e-12 * std::max(1.0, max_abs(gram_))) {
    throw ArgumentError("inner product Gram matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw ArgumentError("inner product Gram matrix is not positive definite");
  }
}

InnerProduct InnerProduct::euclidean(int dim) {
  return InnerProduct(Matrix::Identity(dim, dim));
}

Endomorphism::Endomorphism(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw ArgumentError("endomorphism matrix must be square");
  if (!m_.allFinite()) throw ArgumentError("endomorphism has non-finite entries");
}

namespace {

void require_same_dim(const Endomorphism& a, const InnerProduct& g) {
  if (a.dim() != g.dim()) {
    throw ArgumentError("dimension mismatch: endomorphism " + std::to_string(a.dim()) +
                        " vs inner product " + std::to_string(g.dim()));
  }
}

double symmetry_residual(const Matrix& a, const Matrix& g) {
  return max_abs(g * a - a.transpose() * g);
}

}  // namespace

Endomorphism metallic_from_product(const Endomorphism& F, const MetallicParams& params,
                                   Branch branch, const InnerProduct& g, double tol) {
  require_same_dim(F, g);
  const Matrix& f = F.matrix();
  const Matrix id = Matrix::Identity(F.dim(), F.dim());
  const double sq = max_abs(f * f - id);
  if (sq > tol) {
    throw InvalidStructureError("F^2 != I (residual " + std::to_string(sq) + ")");
  }
  const double sym = symmetry_residual(f, g.gram());
  if (sym > tol) {
    throw InvalidStructureError("F is not g-symmetric (residual " + std::to_string(sym) + ")");
  }
  const double s = branch == Branch::first ? 1.0 : -1.0;
  return Endomorphism(0.5 * params.p * id + s * 0.5 * params.alpha * f);
}

Endomorphism metallic_from_product(const Endomorphism& F, const MetallicParams& params,
                                   Branch branch, double tol) {
  return metallic_from_product(F, params, branch, InnerProduct::euclidean(F.dim()), tol);
}

Endomorphism product_from_metallic(const Endomorphism& phi, const MetallicParams& params,
                                   Sign sign, double tol) {
  const Matrix& m = phi.matrix();
  const Matrix id = Matrix::Identity(phi.dim(), phi.dim());
  const double res = max_abs(m * m - params.p * m - params.q * id);
  if (res > tol) {
    throw InvalidStructureError("phi^2 != p phi + q I (residual " + std::to_string(res) + ")");
  }
  return Endomorphism(to_double(sign) * ((2.0 / params.alpha) * m - (params.p / params.alpha) * id));
}

MetallicCheck check_metallic(const Endomorphism& phi, const InnerProduct& g,
                             const MetallicParams& params, double tol) {
  require_same_dim(phi, g);
  const Matrix& m = phi.matrix();
  MetallicCheck out;
  out.polynomial_residual =
      max_abs(m * m - params.p * m - params.q * Matrix::Identity(phi.dim(), phi.dim()));
  out.symmetry_residual = symmetry_residual(m, g.gram());
  out.ok = out.polynomial_residual <= tol && out.symmetry_residual <= tol;
  return out;
}

Matrix orthonormalize(const Matrix& basis, const InnerProduct& g) {
  if (basis.rows() != g.dim()) {
    throw ArgumentError("orthonormalize: vectors have dimension " + std::to_string(basis.rows()) +
                        ", inner product " + std::to_string(g.dim()));
  }
  const Matrix& G = g.gram();
  Matrix out(basis.rows(), basis.cols());
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    Vector v = basis.col(k);
    const double input_norm = std::sqrt(std::max(0.0, v.dot(G * v)));
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) v -= out.col(j).dot(G * v) * out.col(j);
    }
    const double pivot = std::sqrt(std::max(0.0, v.dot(G * v)));
    if (!(pivot > 1e-10 * input_norm) || input_norm == 0.0) {
      throw DegenerateBasisError("orthonormalize: vector " + std::to_string(k) +
                                 " is linearly dependent on its predecessors");
    }
    out.col(k) = v / pivot;
  }
  return out;
}

Matrix extend_orthonormal(const Matrix& frame, const Matrix& candidates, int count,
                          double pivot) {
  const Eigen::Index dim = candidates.rows();
  if (frame.size() != 0 && frame.rows() != dim) {
    throw ArgumentError("extend_orthonormal: dimension mismatch");
  }
  Matrix out(dim, count);
  Eigen::Index have = frame.size() == 0 ? 0 : frame.cols();
  if (have > count) throw ArgumentError("extend_orthonormal: frame already larger than count");
  if (have > 0) out.leftCols(have) = frame;
  for (Eigen::Index k = 0; k < candidates.cols() && have < count; ++k) {
    Vector v = candidates.col(k);
    const double norm = v.norm();
    if (norm == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < have; ++j) v -= out.col(j).dot(v) * out.col(j);
    }
    const double r = v.norm();
    if (r <= pivot * norm) continue;
    out.col(have++) = v / r;
  }
  if (have < count) {
    throw DegenerateBasisError("extend_orthonormal: candidates span only " +
                               std::to_string(have) + " of " + std::to_string(count) +
                               " directions");
  }
  return out;
}

Matrix orthonormalize(const Matrix& basis) {
  return orthonormalize(basis, InnerProduct::euclidean(static_cast<int>(basis.rows())));
}

}  // namespace mgeo
