#include "bssreg/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bssreg::linalg {

namespace {

void require_dim_match(const SymMatrix& m, const Eigen::VectorXd& v,
                       const char* where) {
  if (m.dim() != v.size()) {
    throw ShapeError(std::string(where) + ": matrix dim " +
                     std::to_string(m.dim()) + " vs vector length " +
                     std::to_string(v.size()));
  }
}

// Eigendecomposition with the preconditions every PSD routine shares.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> decompose(const SymMatrix& m) {
  if (!m.all_finite()) throw NumericalError("matrix has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("symmetric eigensolver failed to converge");
  }
  return solver;
}

void require_floor(const Eigen::VectorXd& eigs, double min_eig_floor,
                   const char* where) {
  if (!(min_eig_floor > 0.0)) {
    throw DomainError(std::string(where) + ": min_eig_floor must be > 0");
  }
  if (eigs(0) < min_eig_floor) {
    throw SingularMatrixError(std::string(where) + ": lambda_min " +
                              std::to_string(eigs(0)) + " below floor " +
                              std::to_string(min_eig_floor));
  }
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw ShapeError("SymMatrix: dim must be >= 1");
  tri_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::from_lower(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw ShapeError("from_lower: matrix not square");
  SymMatrix out(static_cast<int>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j <= i; ++j) out.set(i, j, m(i, j));
  return out;
}

std::size_t SymMatrix::pack(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) {
    throw ShapeError("SymMatrix: index out of range");
  }
  if (i < j) std::swap(i, j);
  return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
}

void SymMatrix::add_scaled_outer(const Eigen::VectorXd& u, double scale) {
  require_dim_match(*this, u, "add_scaled_outer");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j) tri_[pack(i, j)] += scale * u(i) * u(j);
}

Eigen::MatrixXd SymMatrix::dense() const {
  Eigen::MatrixXd out(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j) out(i, j) = out(j, i) = tri_[pack(i, j)];
  return out;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += tri_[pack(i, i)];
  return t;
}

bool SymMatrix::all_finite() const {
  for (double v : tri_)
    if (!std::isfinite(v)) return false;
  return true;
}

EigenExtremes eig_extremes(const SymMatrix& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("eig_extremes: tol must be > 0");
  auto solver = decompose(m);
  const auto& eigs = solver.eigenvalues();
  return {eigs(0), eigs(m.dim() - 1)};
}

Eigen::VectorXd eigenvalues(const SymMatrix& m) {
  return decompose(m).eigenvalues();
}

SymMatrix inverse_psd(const SymMatrix& m, double min_eig_floor) {
  auto solver = decompose(m);
  require_floor(solver.eigenvalues(), min_eig_floor, "inverse_psd");
  const Eigen::MatrixXd inv =
      solver.eigenvectors() *
      solver.eigenvalues().cwiseInverse().asDiagonal() *
      solver.eigenvectors().transpose();
  return SymMatrix::from_lower(inv);
}

SymMatrix sherman_morrison_update(const SymMatrix& m_inv,
                                  const Eigen::VectorXd& u, double scale) {
  require_dim_match(m_inv, u, "sherman_morrison_update");
  const int d = m_inv.dim();
  Eigen::VectorXd w(d);
  const Eigen::MatrixXd dense = m_inv.dense();
  w.noalias() = dense * u;
  const double denom = 1.0 + scale * u.dot(w);
  if (std::abs(denom) < 1e-12) {
    throw DegenerateUpdateError(
        "sherman_morrison_update: denominator within 1e-12 of zero");
  }
  const double factor = scale / denom;
  SymMatrix out(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      out.set(i, j, m_inv(i, j) - factor * w(i) * w(j));
  return out;
}

double trace_of_inverse(const SymMatrix& m, double min_eig_floor) {
  auto solver = decompose(m);
  require_floor(solver.eigenvalues(), min_eig_floor, "trace_of_inverse");
  return solver.eigenvalues().cwiseInverse().sum();
}

double quad_form(const SymMatrix& m_inv, const Eigen::VectorXd& v) {
  require_dim_match(m_inv, v, "quad_form");
  const int d = m_inv.dim();
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    acc += m_inv(i, i) * v(i) * v(i);
    for (int j = 0; j < i; ++j) acc += 2.0 * m_inv(i, j) * v(i) * v(j);
  }
  return acc;
}

Eigen::VectorXd solve_psd(const SymMatrix& m, const Eigen::VectorXd& b) {
  require_dim_match(m, b, "solve_psd");
  auto solver = decompose(m);
  const auto& eigs = solver.eigenvalues();
  const double floor =
      std::max(kSingularRelFloor * std::max(eigs(m.dim() - 1), 0.0),
               std::numeric_limits<double>::min());
  if (eigs(0) < floor) {
    throw SingularMatrixError("solve_psd: matrix singular within floor");
  }
  const Eigen::MatrixXd dense = m.dense();
  const auto apply_inverse = [&](const Eigen::VectorXd& rhs) {
    return (solver.eigenvectors() *
            (solver.eigenvectors().transpose() * rhs).cwiseQuotient(eigs))
        .eval();
  };
  Eigen::VectorXd x = apply_inverse(b);
  // One refinement pass to hold the 1e-8 residual contract.
  x += apply_inverse(b - dense * x);
  return x;
}

}  // namespace bssreg::linalg
