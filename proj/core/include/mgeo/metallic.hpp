#pragma once

// Metallic means constants, metallic / almost product structures on inner
// product spaces, and the small amount of dense linear algebra shared by the
// rest of the library.

#include <Eigen/Dense>

namespace mgeo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Default tolerance for structure checks (phi^2 = p phi + q I, F^2 = I, symmetry).
inline constexpr double kStructureTol = 1e-9;

/// Constants of the metallic structure phi^2 = p phi + q I.
struct MetallicParams {
  int p = 1;
  int q = 1;
  double sigma = 0.0;  ///< positive root (p + sqrt(p^2 + 4q)) / 2
  double alpha = 0.0;  ///< sqrt(p^2 + 4q) = 2 sigma - p
};

/// Builds the metallic constants. Throws DomainError unless p >= 1 and q >= 1.
MetallicParams metallic_constants(int p, int q);

/// Which of the two metallic structures induced by an almost product structure F.
/// first: phi = p/2 I + alpha/2 F, second: phi = p/2 I - alpha/2 F.
enum class Branch { first, second };

/// Sign choice; used for F = +-(2/alpha phi - p/alpha I) and for the +- of the
/// metallic curvature closed form.
enum class Sign { plus, minus };

inline double to_double(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
const char* to_string(Branch b);
const char* to_string(Sign s);

/// Symmetric positive definite Gram matrix.
class InnerProduct {
 public:
  /// Throws ArgumentError unless gram is symmetric (1e-12) with positive spectrum.
  explicit InnerProduct(Matrix gram);
  static InnerProduct euclidean(int dim);

  int dim() const { return static_cast<int>(gram_.rows()); }
  const Matrix& gram() const { return gram_; }
  double operator()(const Vector& x, const Vector& y) const { return x.dot(gram_ * y); }

 private:
  Matrix gram_;
};

/// Square real matrix acting on a space with a declared inner product.
class Endomorphism {
 public:
  /// Throws ArgumentError for non-square or non-finite input.
  explicit Endomorphism(Matrix entries);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Vector operator()(const Vector& v) const { return m_ * v; }

 private:
  Matrix m_;
};

/// phi = (p/2) I +- (alpha/2) F. Throws InvalidStructureError unless F^2 = I and F
/// is g-symmetric to `tol`.
Endomorphism metallic_from_product(const Endomorphism& F, const MetallicParams& params,
                                   Branch branch, const InnerProduct& g,
                                   double tol = kStructureTol);
Endomorphism metallic_from_product(const Endomorphism& F, const MetallicParams& params,
                                   Branch branch, double tol = kStructureTol);

/// F = +-((2/alpha) phi - (p/alpha) I). Throws InvalidStructureError unless
/// phi^2 = p phi + q I to `tol`.
Endomorphism product_from_metallic(const Endomorphism& phi, const MetallicParams& params,
                                   Sign sign, double tol = kStructureTol);

struct MetallicCheck {
  bool ok = false;
  double polynomial_residual = 0.0;  ///< max |phi^2 - p phi - q I|
  double symmetry_residual = 0.0;    ///< max |g phi - phi^T g|
};

/// Diagnostic: never throws on a failed check, only on mismatched dimensions.
MetallicCheck check_metallic(const Endomorphism& phi, const InnerProduct& g,
                             const MetallicParams& params, double tol = kStructureTol);

/// Gram-Schmidt (modified, with one re-orthogonalization pass) of the columns of
/// `basis` with respect to g. Throws DegenerateBasisError when a pivot falls
/// below 1e-10 times the norm of the input vector.
Matrix orthonormalize(const Matrix& basis, const InnerProduct& g);
Matrix orthonormalize(const Matrix& basis);

/// Appends columns of `candidates` (in index order) to the orthonormal columns of
/// `frame`, skipping any whose component orthogonal to the current frame has norm
/// below `pivot` times its own norm, until `count` columns exist. Throws
/// DegenerateBasisError when the candidates do not span enough directions.
Matrix extend_orthonormal(const Matrix& frame, const Matrix& candidates, int count,
                          double pivot = 1e-8);

/// Max-abs entry.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace mgeo
