#pragma once

#include <cstdint>
#include <vector>

#include "resinfo/beliefs.hpp"
#include "resinfo/types.hpp"

namespace resinfo {

/// Fitted vs theoretical exponential decay rate of a rare-event tail.
struct RateEstimate {
  std::vector<std::int64_t> k_values;
  std::vector<double> log_probs;
  double fitted_rate = 0.0;       // least-squares slope of -log_prob vs k
  double theoretical_rate = 0.0;  // binary divergence of the event direction

  double relative_gap() const {
    return std::abs(fitted_rate - theoretical_rate) / theoretical_rate;
  }
};

/// ln P(X >= ceil(q k)) for X ~ Binomial(k, r), by log-space summation.
/// Exact up to floating rounding; requires 0 < r < 1, 0 < q <= 1, k <= 1e6.
double binomial_tail_exact(std::int64_t k, Probability r, Probability q);

/// Compares the fitted decay rate of exact binomial tails against the
/// binary divergence d_bin(q || r). Requires q > r and >= 3 ascending k.
RateEstimate sanov_rate_check(Probability r, Probability q,
                              const std::vector<std::int64_t>& k_grid);

struct MonteCarloEstimate {
  double frequency = 0.0;
  double std_error = 0.0;
  std::int64_t successes = 0;
  std::int64_t trials = 0;
};

/// Frequency of the event "the empirical distribution of k i.i.d. draws from
/// p0 has ambiguity <= epsilon", over seeded trials. Trials use disjoint
/// generator streams, so results are reproducible bit-exactly per seed and
/// do not depend on evaluation order.
MonteCarloEstimate monte_carlo_ambiguity(const DiscreteBelief& p0,
                                         const SemanticPartition& partition,
                                         AmbiguityTarget target, std::int64_t samples_per_trial,
                                         std::int64_t trials, std::uint64_t seed);

/// k >= log(1/eps) / info: samples needed before the ambiguity target is
/// reachable at the given per-sample rate (asymptotic; o(1) term dropped).
double sample_complexity_lower_bound(double info_nats, AmbiguityTarget target);

/// Exponential ambiguity decay gamma0 * exp(-c k I) truncated at a floor.
class DecayModel {
 public:
  DecayModel(Probability gamma0, double c, double info_per_sample, Probability floor);

  Probability gamma0() const noexcept { return gamma0_; }
  double c() const noexcept { return c_; }
  double info_per_sample() const noexcept { return info_per_sample_; }
  Probability floor() const noexcept { return floor_; }
  bool degenerate() const noexcept { return floor_.value() >= gamma0_.value(); }

 private:
  Probability gamma0_;
  double c_;
  double info_per_sample_;
  Probability floor_;
};

/// max(floor, gamma0 * exp(-c k info_per_sample)).
Probability decay_model_ambiguity(const DecayModel& model, std::int64_t k);

/// (1/c) log(gamma0 / floor); unbounded when the floor is zero, zero (with
/// the degenerate flag) when the floor already meets or exceeds gamma0.
ResolvabilityBound resolvability_bound(const DecayModel& model);

}  // namespace resinfo
