#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bssreg/errors.hpp"

namespace bssreg::basis {

enum class MapKind { affine, quadratic };

const char* map_kind_name(MapKind kind);
MapKind map_kind_from_name(const std::string& name);

/// Raw features -> monomial coordinates.
///   affine:    (x_1, ..., x_p, 1)                      dim p + 1
///   quadratic: (1, x_1, ..., x_p, x_i * x_j for i<=j)  dim 1 + p + p(p+1)/2
struct FeatureMap {
  MapKind kind = MapKind::affine;
  int input_dim = 0;

  int output_dim() const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd apply_rows(const Eigen::MatrixXd& X) const;
};

/// Whitened evaluation basis v(x) = L^{-1} phi(x), restricted to the
/// directions kept by the rank-revealing factorization of the pool's
/// second moment. Immutable after construction.
class FeatureBasis {
 public:
  const FeatureMap& map() const { return map_; }
  double ridge() const { return ridge_; }
  int dim() const { return static_cast<int>(kept_.size()); }
  int dropped_directions() const { return dropped_; }
  const std::vector<int>& kept() const { return kept_; }
  /// Lower-triangular whitener L; evaluations apply its inverse.
  const Eigen::MatrixXd& whitener() const { return whitener_; }

  Eigen::VectorXd eval(const Eigen::VectorXd& x) const;
  /// Row-wise evaluation, one basis vector per input row (n x dim).
  Eigen::MatrixXd eval_rows(const Eigen::MatrixXd& X) const;

  /// Content hash; used as basis_id by models referencing this basis.
  const std::string& fingerprint() const { return fingerprint_; }

  nlohmann::json to_json() const;
  static FeatureBasis from_json(const nlohmann::json& j);

 private:
  friend FeatureBasis build_basis(const Eigen::MatrixXd&, const FeatureMap&,
                                  double);
  FeatureBasis() = default;
  void finalize();

  FeatureMap map_;
  double ridge_ = 0.0;
  int dropped_ = 0;
  std::vector<int> kept_;
  Eigen::MatrixXd whitener_;      // dim x dim, lower triangular
  Eigen::MatrixXd whitener_inv_;  // cached L^{-1}
  std::string fingerprint_;
};

struct RhoEstimate {
  double max_diag_deviation;
  double max_offdiag;
  long sample_count;
};

/// Whitens the mapped pool second moment (M + ridge*I) to the identity.
/// Directions with Cholesky pivot below 1e-10 * lambda_max are dropped;
/// with ridge == 0 any deficiency is an error instead.
FeatureBasis build_basis(const Eigen::MatrixXd& pool_features,
                         const FeatureMap& map, double ridge);

Eigen::VectorXd eval_basis(const FeatureBasis& basis, const Eigen::VectorXd& x);

/// Deviation of the empirical Gram of v over `samples` from the identity.
RhoEstimate estimate_rho(const FeatureBasis& basis,
                         const Eigen::MatrixXd& samples);

/// max over pool rows of |v(x)|_2^2.
double alpha_condition_number(const FeatureBasis& basis,
                              const Eigen::MatrixXd& pool_features);

/// Guaranteed window for the distribution norm of h = sum alpha_i v_i:
/// ((1 - rho) * |alpha|^2, (1 + rho*(d-1)) * |alpha|^2).
std::pair<double, double> norm_bounds(const Eigen::VectorXd& alpha, double rho,
                                      int d);

/// binom(ceil(10d + ln(1/eps0)/ln(d)), d) as an exact integer.
/// Throws OverflowError (carrying the natural log of the value) when the
/// result exceeds 64 bits.
std::uint64_t taylor_basis_dim_bound(int d, double eps0);

}  // namespace bssreg::basis
