#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bssreg/errors.hpp"

namespace bssreg::linalg {

/// Dense symmetric matrix backed by packed lower-triangle storage, so
/// m(i,j) == m(j,i) holds exactly rather than up to roundoff.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);
  static SymMatrix identity(int dim);
  /// Builds from the lower triangle of a dense matrix.
  static SymMatrix from_lower(const Eigen::MatrixXd& m);

  int dim() const { return dim_; }

  double operator()(int i, int j) const {
    return tri_[pack(i, j)];
  }
  void set(int i, int j, double value) { tri_[pack(i, j)] = value; }

  /// this += scale * u * u^T
  void add_scaled_outer(const Eigen::VectorXd& u, double scale);

  Eigen::MatrixXd dense() const;
  double trace() const;
  bool all_finite() const;

  bool operator==(const SymMatrix& other) const {
    return dim_ == other.dim_ && tri_ == other.tri_;
  }

 private:
  std::size_t pack(int i, int j) const;
  int dim_;
  std::vector<double> tri_;
};

struct EigenExtremes {
  double lambda_min;
  double lambda_max;
};

/// Smallest and largest eigenvalue, each within tol*(1+|lambda|).
EigenExtremes eig_extremes(const SymMatrix& m, double tol);

/// All eigenvalues in ascending order (not part of the hot path).
Eigen::VectorXd eigenvalues(const SymMatrix& m);

/// Inverse of a positive definite matrix. Throws SingularMatrixError when
/// lambda_min(m) < min_eig_floor, which upstream code treats as a barrier
/// violation signal.
SymMatrix inverse_psd(const SymMatrix& m, double min_eig_floor);

/// (M + scale*u*u^T)^{-1} from M^{-1} by the rank-one update formula.
/// Throws DegenerateUpdateError when |1 + scale*u^T M^{-1} u| < 1e-12.
SymMatrix sherman_morrison_update(const SymMatrix& m_inv,
                                  const Eigen::VectorXd& u, double scale);

/// tr(m^{-1}) for positive definite m.
double trace_of_inverse(const SymMatrix& m, double min_eig_floor);

/// v^T * m_inv * v.
double quad_form(const SymMatrix& m_inv, const Eigen::VectorXd& v);

/// Solves m x = b for positive definite m with one refinement pass;
/// residual max-norm <= 1e-8 * (1 + |b|_inf) for well-conditioned inputs.
Eigen::VectorXd solve_psd(const SymMatrix& m, const Eigen::VectorXd& b);

/// Relative eigenvalue floor below which a matrix counts as singular.
inline constexpr double kSingularRelFloor = 1e-10;

}  // namespace bssreg::linalg
