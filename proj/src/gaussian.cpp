#include "resinfo/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "resinfo/special_functions.hpp"

namespace resinfo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dimensions(Eigen::Index a, Eigen::Index b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// Standard deviation of w's under the belief: ||L' w||.
double projected_stddev(const GaussianBelief& p, const HalfSpace& h) {
  check_dimensions(p.dimension(), h.dimension(), "halfspace");
  const double s = (p.chol_lower().transpose() * h.normal()).norm();
  if (!(s > 0.0)) {
    // Impossible for PD covariance and a nonzero normal.
    throw std::logic_error("halfspace: degenerate direction, w' Sigma w is not positive");
  }
  return s;
}

double log_polytope_mass(double sigma, const OrthantPolytope& polytope) {
  const Probability coord = std_normal_cdf(polytope.threshold() / sigma);
  // log Phi(a/sigma) from the accurate upper tail.
  return static_cast<double>(polytope.dimension()) * std::log1p(-coord.complement());
}

Probability mass_from_log(double log_mass) {
  return Probability(std::exp(log_mass), -std::expm1(log_mass));
}

}  // namespace

GaussianBelief::GaussianBelief(Eigen::VectorXd mean, Eigen::MatrixXd covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  if (mean_.size() == 0) {
    throw std::invalid_argument("GaussianBelief: dimension must be positive");
  }
  check_dimensions(covariance_.rows(), mean_.size(), "GaussianBelief");
  check_dimensions(covariance_.cols(), mean_.size(), "GaussianBelief");
  const double scale = std::max(1.0, covariance_.cwiseAbs().maxCoeff());
  const double asym = (covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-10 * scale)) {
    throw std::invalid_argument("GaussianBelief: covariance is not symmetric within 1e-10");
  }
  const Eigen::MatrixXd sym = 0.5 * (covariance_ + covariance_.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success || !(llt.matrixL().toDenseMatrix().diagonal().minCoeff() > 0.0)) {
    throw std::invalid_argument("GaussianBelief: covariance is not positive definite");
  }
  chol_lower_ = llt.matrixL();
}

HalfSpace::HalfSpace(Eigen::VectorXd normal, double threshold)
    : normal_(std::move(normal)), threshold_(threshold) {
  if (normal_.size() == 0 || !(normal_.norm() > 0.0)) {
    throw std::invalid_argument("HalfSpace: normal vector must be nonzero");
  }
  if (!std::isfinite(threshold_)) {
    throw std::invalid_argument("HalfSpace: threshold must be finite");
  }
}

OrthantPolytope::OrthantPolytope(int dimension, double threshold)
    : dimension_(dimension), threshold_(threshold) {
  if (dimension_ < 1) {
    throw std::invalid_argument("OrthantPolytope: dimension must be at least 1");
  }
  if (!(threshold_ > 0.0)) {
    throw std::invalid_argument("OrthantPolytope: threshold must be positive");
  }
}

PrecisionLimit::PrecisionLimit(double sigma_min) : sigma_min_(sigma_min) {
  if (!(sigma_min_ > 0.0)) {
    throw std::invalid_argument("PrecisionLimit: sigma_min must be positive");
  }
}

double gaussian_kl(const GaussianBelief& p, const GaussianBelief& p0) {
  check_dimensions(p.dimension(), p0.dimension(), "gaussian_kl");
  const auto d = static_cast<double>(p.dimension());
  const Eigen::MatrixXd& l = p.chol_lower();
  const Eigen::MatrixXd& l0 = p0.chol_lower();

  // tr(S0^{-1} S) = ||L0^{-1} L||_F^2 and the quadratic term via one solve each.
  const Eigen::MatrixXd m = l0.triangularView<Eigen::Lower>().solve(l);
  const double trace = m.squaredNorm();
  const Eigen::VectorXd z = l0.triangularView<Eigen::Lower>().solve(p.mean() - p0.mean());
  const double quad = z.squaredNorm();
  const double log_det_ratio =
      2.0 * (l0.diagonal().array().log().sum() - l.diagonal().array().log().sum());
  return std::max(0.5 * (trace + quad - d + log_det_ratio), 0.0);
}

Probability halfspace_mass(const GaussianBelief& p, const HalfSpace& h) {
  const double s = projected_stddev(p, h);
  const double z = (h.threshold() - h.normal().dot(p.mean())) / s;
  return std_normal_cdf(z);
}

double halfspace_delta0(const GaussianBelief& p0, const HalfSpace& h) {
  const double s = projected_stddev(p0, h);
  return (h.threshold() - h.normal().dot(p0.mean())) / s;
}

Eigen::VectorXd halfspace_optimal_shift(const GaussianBelief& p0, const HalfSpace& h,
                                        AmbiguityTarget target) {
  const double s = projected_stddev(p0, h);
  const double delta0 = (h.threshold() - h.normal().dot(p0.mean())) / s;
  const double z = std_normal_quantile(target.posterior_mass());
  if (delta0 >= z) {
    return Eigen::VectorXd::Zero(p0.dimension());
  }
  return (-(z - delta0) / s) * (p0.covariance() * h.normal());
}

double halfspace_resolution_info(double delta0, AmbiguityTarget target) {
  if (target.epsilon() <= 0.0) {
    throw std::domain_error("halfspace_resolution_info: epsilon must lie in (0, 1)");
  }
  const double gap = std_normal_quantile(target.posterior_mass()) - delta0;
  return gap <= 0.0 ? 0.0 : 0.5 * gap * gap;
}

Probability polytope_mass(double sigma, const OrthantPolytope& polytope) {
  if (!(sigma > 0.0)) {
    throw std::domain_error("polytope_mass: sigma must be positive");
  }
  return mass_from_log(log_polytope_mass(sigma, polytope));
}

double polytope_sigma_star(const OrthantPolytope& polytope, AmbiguityTarget target) {
  if (target.epsilon() <= 0.0) {
    throw std::domain_error("polytope_sigma_star: epsilon must lie in (0, 1)");
  }
  // Per-coordinate mass target (1 - eps)^(1/m), complement kept accurate.
  const double log_root = std::log1p(-target.epsilon()) / polytope.dimension();
  const double root = std::exp(log_root);
  if (root <= 0.5) {
    throw std::domain_error(
        "polytope_sigma_star: (1 - eps)^(1/m) <= 1/2; every sigma already meets the target");
  }
  const double z = std_normal_quantile(Probability(root, -std::expm1(log_root)));
  return polytope.threshold() / z;
}

FloorResult ambiguity_floor(const OrthantPolytope& polytope, const PrecisionLimit& lim) {
  const double mu_max = polytope.threshold() / lim.sigma_min();
  const Probability p_max = polytope_mass(lim.sigma_min(), polytope);
  return FloorResult{Probability(p_max.complement(), p_max.value()), p_max, mu_max};
}

double isotropic_shrink_cost(int dimension, double sigma0, double sigma) {
  const double ratio = sigma / sigma0;
  const double cost = 0.5 * dimension * (ratio * ratio - 1.0 + 2.0 * std::log(sigma0 / sigma));
  return std::max(cost, 0.0);
}

PolytopeResolution polytope_resolution_info(double p0_sigma, const OrthantPolytope& polytope,
                                            const PrecisionLimit& lim, AmbiguityTarget target) {
  if (!(p0_sigma > 0.0)) {
    throw std::domain_error("polytope_resolution_info: prior sigma must be positive");
  }
  if (p0_sigma < lim.sigma_min()) {
    throw std::invalid_argument(
        "polytope_resolution_info: prior sigma lies below the precision limit");
  }
  const FloorResult floor = ambiguity_floor(polytope, lim);
  if (target.epsilon() < floor.epsilon_min.value()) {
    return {false, kInf};
  }
  const Probability prior_mass = polytope_mass(p0_sigma, polytope);
  if (prior_mass.complement() <= target.epsilon()) {
    return {true, 0.0};  // already feasible at the prior
  }
  const double sigma_star = polytope_sigma_star(polytope, target);
  const double sigma_target = std::max(sigma_star, lim.sigma_min());
  return {true, isotropic_shrink_cost(polytope.dimension(), p0_sigma, sigma_target)};
}

std::vector<CurvePoint> halfspace_ambiguity_curve(double delta0,
                                                  const std::vector<double>& info_grid) {
  std::vector<CurvePoint> curve;
  curve.reserve(info_grid.size());
  double prev = -kInf;
  for (double info : info_grid) {
    if (!(info >= 0.0) || info < prev) {
      throw std::invalid_argument("ambiguity curve: info grid must be nonnegative ascending");
    }
    prev = info;
    // 1 - Phi(delta0 + sqrt(2 I)), evaluated as the lower tail of the negation.
    const double ambiguity = std_normal_cdf(-(delta0 + std::sqrt(2.0 * info))).value();
    curve.push_back({info, ambiguity});
  }
  return curve;
}

std::vector<CurvePoint> polytope_ambiguity_curve(double sigma0, const OrthantPolytope& polytope,
                                                 const PrecisionLimit& lim,
                                                 const std::vector<double>& info_grid) {
  if (!(sigma0 > lim.sigma_min())) {
    throw std::invalid_argument(
        "polytope_ambiguity_curve: prior sigma must exceed the precision limit");
  }
  const double cost_at_limit = isotropic_shrink_cost(polytope.dimension(), sigma0, lim.sigma_min());

  std::vector<CurvePoint> curve;
  curve.reserve(info_grid.size());
  double prev = -kInf;
  for (double info : info_grid) {
    if (!(info >= 0.0) || info < prev) {
      throw std::invalid_argument("ambiguity curve: info grid must be nonnegative ascending");
    }
    prev = info;

    double sigma;
    if (info >= cost_at_limit) {
      sigma = lim.sigma_min();  // budget saturates the precision limit
    } else if (info == 0.0) {
      sigma = sigma0;
    } else {
      // Shrink cost is strictly decreasing in sigma on (0, sigma0]; bisect.
      double lo = lim.sigma_min();
      double hi = sigma0;
      for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double cost = isotropic_shrink_cost(polytope.dimension(), sigma0, mid);
        if (std::fabs(cost - info) <= 1e-12) {
          lo = hi = mid;
          break;
        }
        (cost > info ? lo : hi) = mid;
        if (hi - lo <= 1e-15 * sigma0) break;
      }
      sigma = 0.5 * (lo + hi);
    }
    curve.push_back({info, polytope_mass(sigma, polytope).complement()});
  }
  return curve;
}

ResolvabilityBound gaussian_resolvability_bound(Probability gamma0,
                                                const OrthantPolytope& polytope,
                                                const PrecisionLimit& lim, double c) {
  if (!(c > 0.0)) {
    throw std::domain_error("gaussian_resolvability_bound: c must be positive");
  }
  const double floor = ambiguity_floor(polytope, lim).epsilon_min.value();
  if (gamma0.value() <= floor) {
    return {true, true, 0.0};
  }
  if (floor == 0.0) {
    return {false, false, kInf};
  }
  return {true, false, std::log(gamma0.value() / floor) / c};
}

}  // namespace resinfo
