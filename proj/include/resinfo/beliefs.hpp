#pragma once

#include <cstddef>
#include <vector>

#include "resinfo/types.hpp"

namespace resinfo {

/// Probability vector over a finite state alphabet.
///
/// Construction rejects vectors whose entries are negative or whose sum
/// strays from 1 by more than 1e-12; nothing is renormalized silently.
class DiscreteBelief {
 public:
  explicit DiscreteBelief(std::vector<double> probs);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const noexcept { return probs_; }

  bool operator==(const DiscreteBelief& other) const { return probs_ == other.probs_; }

 private:
  std::vector<double> probs_;
};

/// Set of state indices sharing one interpretation. Stored sorted and
/// deduplicated; may be empty only when explicitly constructed that way.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<std::size_t> members);

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(std::size_t index) const;

 private:
  std::vector<std::size_t> members_;
};

/// Ordered list of pairwise-disjoint regions covering {0, ..., n-1}.
class SemanticPartition {
 public:
  SemanticPartition(std::vector<Region> regions, std::size_t alphabet_size);

  const std::vector<Region>& regions() const noexcept { return regions_; }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t region_count() const noexcept { return regions_.size(); }

  /// Region index of each state, by state index.
  const std::vector<std::size_t>& region_of_state() const noexcept { return region_of_state_; }

 private:
  std::vector<Region> regions_;
  std::size_t alphabet_size_;
  std::vector<std::size_t> region_of_state_;
};

/// Total belief mass on a region.
Probability region_mass(const DiscreteBelief& p, const Region& a);

/// Gamma(p) = 1 - max_a p(A_a): mass outside the most likely region.
Probability ambiguity(const DiscreteBelief& p, const SemanticPartition& partition);

/// Index of the region with maximal mass; ties break to the lowest index.
std::size_t most_likely_region(const DiscreteBelief& p, const SemanticPartition& partition);

/// Gamma_A(p) = 1 - p(A).
Probability region_ambiguity(const DiscreteBelief& p, const Region& a);

/// KL divergence sum p_i log(p_i / q_i) in nats, with 0 log(0/x) = 0.
/// Returns +infinity when p is not absolutely continuous w.r.t. q.
double kl_divergence(const DiscreteBelief& p, const DiscreteBelief& q);

/// Binary divergence d_bin(u || r) between Bernoulli(u) and Bernoulli(r).
/// Requires r strictly inside (0, 1).
double binary_divergence(Probability u, Probability r);

/// Total variation distance (half the L1 distance).
Probability total_variation(const DiscreteBelief& p, const DiscreteBelief& q);

}  // namespace resinfo
