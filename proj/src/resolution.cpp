#include "resinfo/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "resinfo/rng.hpp"

namespace resinfo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double block_objective(const std::vector<double>& w, const std::vector<double>& prior) {
  double obj = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 0.0) obj += w[i] * std::log(w[i] / prior[i]);
  }
  return obj;
}

// Minimizes sum_i w_i log(w_i / prior_i) over {w >= 0, sum w = target_mass}
// by exponentiated-gradient (multiplicative-weights) descent from a random
// interior point. prior entries are strictly positive.
double eg_minimize_block(const std::vector<double>& prior, double target_mass,
                         const CounterRng& rng, std::uint64_t& counter,
                         const BruteForceConfig& cfg, bool& converged) {
  converged = true;
  if (target_mass <= 0.0 || prior.empty()) return 0.0;
  const std::size_t n = prior.size();

  // Random interior start: exponential spacings give a uniform simplex point.
  std::vector<double> w(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = -std::log(1.0 - rng.uniform(counter++));
    total += w[i];
  }
  for (double& wi : w) wi *= target_mass / total;

  double obj = block_objective(w, prior);
  double step = 0.5;
  std::vector<double> trial(n);
  converged = false;
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    // Gradient of the objective is log(w/prior) + 1; the constant and the
    // block-mean drop out after renormalization, so center for range safety.
    double mean_g = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean_g += std::log(w[i] / prior[i]);
    mean_g /= static_cast<double>(n);

    double trial_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double g = std::log(w[i] / prior[i]) - mean_g;
      trial[i] = w[i] * std::exp(-step * std::clamp(g, -60.0, 60.0));
      trial_total += trial[i];
    }
    for (double& ti : trial) ti *= target_mass / trial_total;

    const double trial_obj = block_objective(trial, prior);
    if (trial_obj > obj + 1e-15) {
      step *= 0.5;
      if (step < 1e-12) break;
      continue;
    }
    const double drop = obj - trial_obj;
    w.swap(trial);
    obj = trial_obj;
    step = std::min(step * 1.3, 1.0);
    if (drop <= cfg.objective_tolerance) {
      converged = true;
      break;
    }
  }
  return obj;
}

// Exhaustive search over the composition grid {k/steps} for alphabets <= 4.
double grid_search(const std::vector<double>& p0, const std::vector<bool>& in_region, double q,
                   int steps) {
  const std::size_t n = p0.size();
  double best = kInf;
  std::vector<int> counts(n, 0);
  const double inv = 1.0 / static_cast<double>(steps);

  auto evaluate = [&]() {
    double mass_a = 0.0;
    double kl = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double pi = counts[i] * inv;
      if (pi == 0.0) continue;
      if (p0[i] == 0.0) return;  // not absolutely continuous
      if (in_region[i]) mass_a += pi;
      kl += pi * std::log(pi / p0[i]);
    }
    if (mass_a + 1e-15 >= q && kl < best) best = kl;
  };

  switch (n) {
    case 1:
      counts[0] = steps;
      evaluate();
      break;
    case 2:
      for (int k0 = 0; k0 <= steps; ++k0) {
        counts[0] = k0;
        counts[1] = steps - k0;
        evaluate();
      }
      break;
    case 3:
      for (int k0 = 0; k0 <= steps; ++k0) {
        counts[0] = k0;
        for (int k1 = 0; k0 + k1 <= steps; ++k1) {
          counts[1] = k1;
          counts[2] = steps - k0 - k1;
          evaluate();
        }
      }
      break;
    default:
      for (int k0 = 0; k0 <= steps; ++k0) {
        counts[0] = k0;
        for (int k1 = 0; k0 + k1 <= steps; ++k1) {
          counts[1] = k1;
          for (int k2 = 0; k0 + k1 + k2 <= steps; ++k2) {
            counts[2] = k2;
            counts[3] = steps - k0 - k1 - k2;
            evaluate();
          }
        }
      }
      break;
  }
  return best;
}

}  // namespace

double resolution_info_region(Probability prior_mass, AmbiguityTarget target) {
  const double m = prior_mass.value();
  if (m <= 0.0 || m >= 1.0) {
    throw std::domain_error("resolution_info_region: prior mass must lie strictly inside (0, 1)");
  }
  const Probability q = target.posterior_mass();
  if (q.value() <= m) return 0.0;
  return binary_divergence(q, prior_mass);
}

DiscreteBelief optimal_posterior(const DiscreteBelief& p0, const Region& a,
                                 AmbiguityTarget target) {
  const Probability mass = region_mass(p0, a);
  const double m = mass.value();
  if (m <= 0.0 || m >= 1.0) {
    throw std::domain_error("optimal_posterior: region prior mass must lie strictly inside (0, 1)");
  }
  const double q = 1.0 - target.epsilon();
  if (q <= m) return p0;

  const double in_factor = q / m;
  const double out_factor = target.epsilon() / mass.complement();
  std::vector<bool> in_region(p0.size(), false);
  for (std::size_t s : a.members()) in_region[s] = true;

  std::vector<double> probs(p0.size());
  for (std::size_t i = 0; i < p0.size(); ++i) {
    probs[i] = (in_region[i] ? in_factor : out_factor) * p0[i];
  }
  return DiscreteBelief(std::move(probs));
}

ResolutionResult resolution_info_partition(const DiscreteBelief& p0,
                                           const SemanticPartition& partition,
                                           AmbiguityTarget target) {
  const Probability gamma = ambiguity(p0, partition);
  ResolutionResult result;
  const double q = 1.0 - target.epsilon();

  if (gamma.value() <= target.epsilon()) {
    result.feasible_at_prior = true;
    result.info_nats = 0.0;
    result.achieving_posterior = p0;
    result.binding_region_index = most_likely_region(p0, partition);
    for (std::size_t r = 0; r < partition.region_count(); ++r) {
      if (region_mass(p0, partition.regions()[r]).value() >= q) {
        result.binding_region_index = r;
        break;
      }
    }
    return result;
  }

  double best_cost = kInf;
  std::size_t best_index = 0;
  for (std::size_t r = 0; r < partition.region_count(); ++r) {
    const Probability mass = region_mass(p0, partition.regions()[r]);
    if (mass.value() <= 0.0 || mass.value() >= 1.0) {
      throw std::domain_error("resolution_info_partition: region " + std::to_string(r) +
                              " has degenerate prior mass " + std::to_string(mass.value()) +
                              " while projection is required");
    }
    const double cost = resolution_info_region(mass, target);
    if (cost < best_cost) {
      best_cost = cost;
      best_index = r;
    }
  }
  result.info_nats = best_cost;
  result.binding_region_index = best_index;
  result.achieving_posterior = optimal_posterior(p0, partition.regions()[best_index], target);
  result.feasible_at_prior = false;
  return result;
}

ProjectionEstimate brute_force_projection(const DiscreteBelief& p0, const Region& a,
                                          AmbiguityTarget target, const BruteForceConfig& config) {
  if (p0.size() > 8) {
    throw std::invalid_argument("brute_force_projection: oracle is limited to alphabets <= 8");
  }
  const double mass_a = region_mass(p0, a).value();
  const double q = 1.0 - target.epsilon();
  if (q <= mass_a) return {0.0, true};
  if (mass_a <= 0.0) return {kInf, true};  // no finite-KL posterior can reach A

  // The constraint is active at the optimum: any p with p(A) > q is convexly
  // dominated by a point on the segment toward p0 that still satisfies it.
  // On {p(A) = q} the objective splits into independent blocks over A and
  // its complement, holding masses q and 1 - q. States with zero prior mass
  // stay at zero (anything else has infinite divergence).
  std::vector<bool> in_region(p0.size(), false);
  for (std::size_t s : a.members()) {
    if (s >= p0.size()) {
      throw std::out_of_range("brute_force_projection: region index out of range");
    }
    in_region[s] = true;
  }
  std::vector<double> prior_in, prior_out;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    if (p0[i] <= 0.0) continue;
    (in_region[i] ? prior_in : prior_out).push_back(p0[i]);
  }

  double best = kInf;
  bool any_converged = false;
  for (int restart = 0; restart < std::max(config.restarts, 1); ++restart) {
    CounterRng rng(config.seed, static_cast<std::uint64_t>(restart));
    std::uint64_t counter = 0;
    bool conv_in = false;
    bool conv_out = false;
    const double obj_in = eg_minimize_block(prior_in, q, rng, counter, config, conv_in);
    const double obj_out = eg_minimize_block(prior_out, 1.0 - q, rng, counter, config, conv_out);
    const double obj = obj_in + obj_out;
    if (obj < best) best = obj;
    any_converged = any_converged || (conv_in && conv_out);
  }

  if (!any_converged && config.grid_fallback && p0.size() <= 4) {
    const double grid_best = grid_search(p0.probs(), in_region, q, config.grid_steps);
    best = std::min(best, grid_best);
  }
  return {std::max(best, 0.0), any_converged};
}

}  // namespace resinfo
