#pragma once

#include <Eigen/Dense>
#include <vector>

#include "resinfo/types.hpp"

namespace resinfo {

/// Multivariate Gaussian belief N(mean, covariance).
///
/// The covariance must be symmetric (to 1e-10) and positive definite; the
/// Cholesky factor is computed on construction and cached.
class GaussianBelief {
 public:
  GaussianBelief(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  const Eigen::VectorXd& mean() const noexcept { return mean_; }
  const Eigen::MatrixXd& covariance() const noexcept { return covariance_; }
  const Eigen::MatrixXd& chol_lower() const noexcept { return chol_lower_; }
  Eigen::Index dimension() const noexcept { return mean_.size(); }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd chol_lower_;
};

/// Half-space region {s : w's <= T}; (w, T) matters only up to positive scaling.
class HalfSpace {
 public:
  HalfSpace(Eigen::VectorXd normal, double threshold);

  const Eigen::VectorXd& normal() const noexcept { return normal_; }
  double threshold() const noexcept { return threshold_; }
  Eigen::Index dimension() const noexcept { return normal_.size(); }

 private:
  Eigen::VectorXd normal_;
  double threshold_;
};

/// Orthant-type polytope {s in R^m : s_i <= a for all i}, a > 0.
class OrthantPolytope {
 public:
  OrthantPolytope(int dimension, double threshold);

  int dimension() const noexcept { return dimension_; }
  double threshold() const noexcept { return threshold_; }

 private:
  int dimension_;
  double threshold_;
};

/// Smallest standard deviation the posterior family can realize.
class PrecisionLimit {
 public:
  explicit PrecisionLimit(double sigma_min);
  double sigma_min() const noexcept { return sigma_min_; }

 private:
  double sigma_min_;
};

/// Irreducible ambiguity floor of a polytope under a precision limit.
struct FloorResult {
  Probability epsilon_min;
  Probability p_max;
  double mu_max = 0.0;
};

/// Resolution information for the isotropic polytope projection; infeasible
/// targets (below the floor) carry info_nats = +infinity.
struct PolytopeResolution {
  bool feasible = true;
  double info_nats = 0.0;
};

struct CurvePoint {
  double info_nats = 0.0;
  double ambiguity = 0.0;
};

/// KL(p || p0) in nats between Gaussians, via Cholesky solves.
double gaussian_kl(const GaussianBelief& p, const GaussianBelief& p0);

/// p(A) = Phi((T - w'mu) / sqrt(w' Sigma w)) for the half-space A.
Probability halfspace_mass(const GaussianBelief& p, const HalfSpace& h);

/// Signed Mahalanobis distance from the mean to the boundary hyperplane.
double halfspace_delta0(const GaussianBelief& p0, const HalfSpace& h);

/// Cheapest mean displacement putting mass 1 - epsilon on the half-space;
/// zero when the prior already satisfies the target.
Eigen::VectorXd halfspace_optimal_shift(const GaussianBelief& p0, const HalfSpace& h,
                                        AmbiguityTarget target);

/// (1/2) [(PhiInv(1 - eps) - delta0)^+]^2: the mean-shift resolution cost.
double halfspace_resolution_info(double delta0, AmbiguityTarget target);

/// Phi(a / sigma)^m for the zero-mean isotropic posterior N(0, sigma^2 I).
Probability polytope_mass(double sigma, const OrthantPolytope& polytope);

/// Largest admissible sigma meeting the mass target 1 - epsilon.
/// Rejects targets with (1 - eps)^(1/m) <= 1/2, which every sigma satisfies.
double polytope_sigma_star(const OrthantPolytope& polytope, AmbiguityTarget target);

/// mu_max = a / sigma_min, p_max = Phi(mu_max)^m, epsilon_min = 1 - p_max.
FloorResult ambiguity_floor(const OrthantPolytope& polytope, const PrecisionLimit& lim);

/// Cost of shrinking an isotropic prior N(0, sigma0^2 I) until the polytope
/// holds mass 1 - epsilon, or the infeasible marker below the floor.
PolytopeResolution polytope_resolution_info(double p0_sigma, const OrthantPolytope& polytope,
                                            const PrecisionLimit& lim, AmbiguityTarget target);

/// Ambiguity attainable at each information budget for a half-space:
/// eps(I) = 1 - Phi(delta0 + sqrt(2 I)). Grid must be nonnegative ascending.
std::vector<CurvePoint> halfspace_ambiguity_curve(double delta0,
                                                  const std::vector<double>& info_grid);

/// Ambiguity attainable at each information budget for the polytope, with
/// the shrink sigma(I) solved by bisection and clamped at sigma_min.
std::vector<CurvePoint> polytope_ambiguity_curve(double sigma0, const OrthantPolytope& polytope,
                                                 const PrecisionLimit& lim,
                                                 const std::vector<double>& info_grid);

/// Resolvability cap (1/c) log(gamma0 / epsilon_min) induced by the floor;
/// unbounded when the floor vanishes, zero when gamma0 is already at it.
ResolvabilityBound gaussian_resolvability_bound(Probability gamma0,
                                                const OrthantPolytope& polytope,
                                                const PrecisionLimit& lim, double c);

/// KL between isotropic zero-mean Gaussians, (m/2)(s^2/s0^2 - 1 + 2 log(s0/s)).
double isotropic_shrink_cost(int dimension, double sigma0, double sigma);

}  // namespace resinfo
