#include "mgeo/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mgeo/errors.hpp"

namespace mgeo {

ImmersionSpec make_immersion(const ProductSpaceForm& space, int n,
                             const std::vector<std::string>& coords,
                             const std::vector<std::pair<std::string, double>>& constants) {
  if (n < 1 || n > std::min(space.dim(), kMaxParams)) {
    throw ArgumentError("submanifold dimension n=" + std::to_string(n) + " must be in [1, " +
                        std::to_string(std::min(space.dim(), kMaxParams)) + "]");
  }
  if (static_cast<int>(coords.size()) != space.embedding_dim()) {
    throw ArgumentError("immersion has " + std::to_string(coords.size()) +
                        " coordinate expressions, the realization needs " +
                        std::to_string(space.embedding_dim()));
  }
  ImmersionSpec spec{space, n, {}, {}, {}};
  SymbolTable sym;
  sym.n_vars = n;
  for (const auto& [name, value] : constants) {
    const bool var_like = name.size() > 1 && name[0] == 'u' &&
                          name.find_first_not_of("0123456789", 1) == std::string::npos;
    if (name.empty() || var_like || name == "sin" || name == "cos" || name == "exp" ||
        name == "sqrt") {
      throw ArgumentError("constant name '" + name + "' is reserved");
    }
    if (std::find(spec.constant_names.begin(), spec.constant_names.end(), name) !=
        spec.constant_names.end()) {
      throw ArgumentError("constant '" + name + "' declared twice");
    }
    if (!std::isfinite(value)) throw ArgumentError("constant '" + name + "' is not finite");
    sym.constants.push_back(name);
    spec.constant_names.push_back(name);
    spec.constant_values.push_back(value);
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    spec.coords.push_back(parse_expression(coords[i], sym, static_cast<int>(i) + 1));
  }
  return spec;
}

ImmersionJet jet2(const ImmersionSpec& spec, const std::vector<double>& u) {
  const int n = spec.n;
  if (static_cast<int>(u.size()) != n) {
    throw ArgumentError("parameter point has " + std::to_string(u.size()) +
                        " entries, expected " + std::to_string(n));
  }
  const int E = static_cast<int>(spec.coords.size());
  ImmersionJet j{Vector(E), Matrix(E, n), Matrix(E, n * n)};
  for (int k = 0; k < E; ++k) {
    const Jet2 v = spec.coords[k].eval_jet(u, spec.constant_values);
    j.value(k) = v.v;
    for (int a = 0; a < n; ++a) {
      j.d1(k, a) = v.g[a];
      for (int b = 0; b < n; ++b) j.d2(k, a * n + b) = v.hess(a, b);
    }
  }
  return j;
}

Matrix SubmanifoldPointData::frame() const {
  Matrix B(tangent_frame.rows(), m);
  B.leftCols(n) = tangent_frame;
  if (m > n) B.rightCols(m - n) = normal_frame;
  return B;
}

namespace {

Matrix project_columns(const ProductSpaceForm& space, const AmbientPoint& x, const Matrix& v) {
  Matrix out(v.rows(), v.cols());
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    out.col(c) = project_to_manifold_tangent(space, x, v.col(c)).vec;
  }
  return out;
}

}  // namespace

SubmanifoldPointData point_data(const ImmersionSpec& spec, const std::vector<double>& u) {
  const ProductSpaceForm& space = spec.space;
  const ImmersionJet j = jet2(spec, u);
  SubmanifoldPointData pd;
  pd.u = u;
  pd.n = spec.n;
  pd.m = space.dim();
  pd.x = make_point(space, j.value, kConstraintTol);

  for (int f = 0; f < 2; ++f) {
    if (space.factor(f).kind != FactorKind::sphere) continue;
    const Vector y = j.value.segment(space.offset(f), space.block_size(f));
    for (int a = 0; a < spec.n; ++a) {
      const Vector dy = j.d1.col(a).segment(space.offset(f), space.block_size(f));
      if (std::abs(y.dot(dy)) > kConstraintTol * y.norm() * std::max(1.0, dy.norm())) {
        throw OffManifoldError("immersion leaves sphere factor " + std::to_string(f + 1) +
                               " along u" + std::to_string(a + 1));
      }
    }
  }

  const Matrix D = project_columns(space, pd.x, j.d1);
  pd.metric = D.transpose() * D;
  Eigen::SelfAdjointEigenSolver<Matrix> es(pd.metric, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > kMaxMetricCondition) {
    throw DegenerateImmersionError("induced metric is degenerate (eigenvalues " +
                                   std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  pd.metric_cond = hi / lo;
  try {
    pd.tangent_frame = orthonormalize(D);
  } catch (const DegenerateBasisError& e) {
    throw DegenerateImmersionError(e.what());
  }
  pd.coord_to_frame = pd.metric.ldlt().solve(D.transpose() * pd.tangent_frame);

  const int E = space.embedding_dim();
  const Matrix cand = project_columns(space, pd.x, Matrix::Identity(E, E));
  const Matrix full = extend_orthonormal(pd.tangent_frame, cand, pd.m);
  pd.normal_frame = full.rightCols(pd.m - pd.n);

  const int n = pd.n;
  const Matrix& C = pd.coord_to_frame;
  pd.H = Vector::Zero(pd.m - n);
  for (int r = 0; r < pd.m - n; ++r) {
    Matrix h(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) h(a, b) = pd.normal_frame.col(r).dot(j.second(a, b));
    Matrix A = C.transpose() * h * C;
    A = 0.5 * (A + A.transpose()).eval();
    pd.H(r) = A.trace() / n;
    pd.shape_ops.push_back(std::move(A));
  }
  pd.H_sq = pd.H.squaredNorm();
  return pd;
}

NormalCurvature normal_curvature(const Tensor4& ambient, const std::vector<Matrix>& shape_ops) {
  const int k = static_cast<int>(shape_ops.size());
  const int n = ambient.dim() - k;
  NormalCurvature Rp(n, k);
  for (int t = 0; t < k; ++t)
    for (int s = 0; s < k; ++s) {
      const Matrix comm = shape_ops[t] * shape_ops[s] - shape_ops[s] * shape_ops[t];
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
          Rp(i, jj, t, s) = ambient(i, jj, n + t, n + s) + comm(jj, i);
        }
    }
  return Rp;
}

NormalCurvature normal_curvature(const ImmersionSpec& spec, const std::vector<double>& u) {
  const SubmanifoldPointData pd = point_data(spec, u);
  return normal_curvature(ambient_tensor(spec.space, pd.frame()), pd.shape_ops);
}

Matrix PhiDecomposition::full() const {
  const Eigen::Index n = T.rows(), k = nmat.rows();
  Matrix out(n + k, n + k);
  out.topLeftCorner(n, n) = T;
  out.bottomLeftCorner(k, n) = N;
  out.topRightCorner(n, k) = t;
  out.bottomRightCorner(k, k) = nmat;
  return out;
}

PhiDecomposition phi_decompose(const ImmersionSpec& spec, const SubmanifoldPointData& pd) {
  const Matrix B = pd.frame();
  const Matrix phi = B.transpose() * spec.space.phi_diag().asDiagonal() * B;
  const int n = pd.n, k = pd.m - pd.n;
  PhiDecomposition d;
  d.T = phi.topLeftCorner(n, n);
  d.N = phi.bottomLeftCorner(k, n);
  d.t = phi.topRightCorner(n, k);
  d.nmat = phi.bottomRightCorner(k, k);
  const Matrix Q = adapted_frame(spec.space, pd.x).transpose() * B;
  const Matrix ref = Q.transpose() * metallic_structure_at(spec.space, pd.x).matrix() * Q;
  d.reassembly_residual = max_abs(d.full() - ref);
  d.symmetry_residual = max_abs(d.T - d.T.transpose());
  return d;
}

PhiDecomposition phi_decompose(const ImmersionSpec& spec, const std::vector<double>& u) {
  return phi_decompose(spec, point_data(spec, u));
}

}  // namespace mgeo
