#include "resinfo/large_deviations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "resinfo/rng.hpp"

namespace resinfo {
namespace {

// Smallest integer j with j >= q * k, robust to the product landing a hair
// above an integer it should equal (e.g. 0.7 * 500).
std::int64_t ceil_fraction(double q, std::int64_t k) {
  const double t = q * static_cast<double>(k);
  const double nudge = 1e-9 * std::max(1.0, t);
  return static_cast<std::int64_t>(std::ceil(t - nudge));
}

}  // namespace

double binomial_tail_exact(std::int64_t k, Probability r, Probability q) {
  if (k < 1 || k > 1000000) {
    throw std::invalid_argument("binomial_tail_exact: k must lie in [1, 1e6]");
  }
  if (r.value() <= 0.0 || r.value() >= 1.0) {
    throw std::domain_error("binomial_tail_exact: r must lie strictly inside (0, 1)");
  }
  if (q.value() <= 0.0) {
    throw std::domain_error("binomial_tail_exact: q must be positive");
  }
  const std::int64_t j0 = std::max<std::int64_t>(ceil_fraction(q.value(), k), 0);
  if (j0 <= 0) return 0.0;  // the whole sample space
  if (j0 > k) {
    throw std::domain_error("binomial_tail_exact: threshold exceeds the sample count");
  }

  const double log_r = std::log(r.value());
  const double log_1mr = std::log(r.complement());
  const double lg_k1 = std::lgamma(static_cast<double>(k) + 1.0);

  // Log binomial pmf terms for j in [j0, k], combined by log-sum-exp.
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(k - j0 + 1));
  double max_term = -std::numeric_limits<double>::infinity();
  for (std::int64_t j = j0; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    const double t = lg_k1 - std::lgamma(jd + 1.0) - std::lgamma(static_cast<double>(k - j) + 1.0) +
                     jd * log_r + static_cast<double>(k - j) * log_1mr;
    terms.push_back(t);
    max_term = std::max(max_term, t);
  }
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - max_term);
  const double log_tail = max_term + std::log(sum);
  return std::min(log_tail, 0.0);
}

RateEstimate sanov_rate_check(Probability r, Probability q,
                              const std::vector<std::int64_t>& k_grid) {
  if (!(q.value() > r.value())) {
    throw std::invalid_argument("sanov_rate_check: rare-event direction requires q > r");
  }
  if (k_grid.size() < 3) {
    throw std::invalid_argument("sanov_rate_check: need at least 3 grid points");
  }
  for (std::size_t i = 1; i < k_grid.size(); ++i) {
    if (k_grid[i] <= k_grid[i - 1]) {
      throw std::invalid_argument("sanov_rate_check: k grid must be strictly ascending");
    }
  }

  RateEstimate estimate;
  estimate.k_values = k_grid;
  estimate.log_probs.reserve(k_grid.size());
  for (std::int64_t k : k_grid) {
    estimate.log_probs.push_back(binomial_tail_exact(k, r, q));
  }

  // Least-squares slope of y = -log_prob against k, intercept absorbing the
  // subexponential prefactor.
  const double n = static_cast<double>(k_grid.size());
  double mean_k = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    mean_k += static_cast<double>(k_grid[i]);
    mean_y += -estimate.log_probs[i];
  }
  mean_k /= n;
  mean_y /= n;
  double cov = 0.0;
  double var = 0.0;
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    const double dk = static_cast<double>(k_grid[i]) - mean_k;
    cov += dk * (-estimate.log_probs[i] - mean_y);
    var += dk * dk;
  }
  estimate.fitted_rate = cov / var;
  estimate.theoretical_rate = binary_divergence(q, r);
  return estimate;
}

MonteCarloEstimate monte_carlo_ambiguity(const DiscreteBelief& p0,
                                         const SemanticPartition& partition,
                                         AmbiguityTarget target, std::int64_t samples_per_trial,
                                         std::int64_t trials, std::uint64_t seed) {
  if (partition.alphabet_size() != p0.size()) {
    throw std::invalid_argument("monte_carlo_ambiguity: partition/belief size mismatch");
  }
  if (samples_per_trial < 1) {
    throw std::invalid_argument("monte_carlo_ambiguity: need at least one sample per trial");
  }
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo_ambiguity: need at least one trial");
  }

  // Ambiguity(p_k) <= eps  <=>  max region count >= ceil((1 - eps) k).
  // Same threshold convention as binomial_tail_exact, so binary reductions
  // compare like for like.
  const std::int64_t count_threshold =
      std::max<std::int64_t>(ceil_fraction(1.0 - target.epsilon(), samples_per_trial), 0);

  std::vector<double> cumulative(p0.size());
  double running = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    running += p0[i];
    cumulative[i] = running;
  }
  cumulative.back() = 1.0;

  const std::vector<std::size_t>& region_of = partition.region_of_state();
  std::vector<std::int64_t> counts(partition.region_count());
  std::int64_t successes = 0;

  for (std::int64_t t = 0; t < trials; ++t) {
    const CounterRng rng(seed, static_cast<std::uint64_t>(t));
    std::fill(counts.begin(), counts.end(), 0);
    for (std::int64_t i = 0; i < samples_per_trial; ++i) {
      const double u = rng.uniform(static_cast<std::uint64_t>(i));
      const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      const auto state = static_cast<std::size_t>(it - cumulative.begin());
      ++counts[region_of[std::min(state, p0.size() - 1)]];
    }
    const std::int64_t max_count = *std::max_element(counts.begin(), counts.end());
    if (max_count >= count_threshold) ++successes;
  }

  MonteCarloEstimate estimate;
  estimate.successes = successes;
  estimate.trials = trials;
  estimate.frequency = static_cast<double>(successes) / static_cast<double>(trials);
  estimate.std_error =
      std::sqrt(estimate.frequency * (1.0 - estimate.frequency) / static_cast<double>(trials));
  return estimate;
}

double sample_complexity_lower_bound(double info_nats, AmbiguityTarget target) {
  if (!(info_nats > 0.0)) {
    throw std::domain_error("sample_complexity_lower_bound: info must be positive");
  }
  if (target.epsilon() <= 0.0) {
    throw std::domain_error("sample_complexity_lower_bound: epsilon must lie in (0, 1)");
  }
  return -std::log(target.epsilon()) / info_nats;
}

DecayModel::DecayModel(Probability gamma0, double c, double info_per_sample, Probability floor)
    : gamma0_(gamma0), c_(c), info_per_sample_(info_per_sample), floor_(floor) {
  if (!(c_ > 0.0)) {
    throw std::domain_error("DecayModel: c must be positive");
  }
  if (!(info_per_sample_ >= 0.0)) {
    throw std::domain_error("DecayModel: info_per_sample must be nonnegative");
  }
}

Probability decay_model_ambiguity(const DecayModel& model, std::int64_t k) {
  if (k < 0) {
    throw std::invalid_argument("decay_model_ambiguity: k must be nonnegative");
  }
  const double decayed = model.gamma0().value() *
                         std::exp(-model.c() * static_cast<double>(k) * model.info_per_sample());
  return Probability(std::max(model.floor().value(), decayed));
}

ResolvabilityBound resolvability_bound(const DecayModel& model) {
  if (model.degenerate()) {
    return {true, true, 0.0};
  }
  if (model.floor().value() == 0.0) {
    return {false, false, std::numeric_limits<double>::infinity()};
  }
  return {true, false, std::log(model.gamma0().value() / model.floor().value()) / model.c()};
}

}  // namespace resinfo
