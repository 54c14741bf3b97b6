#pragma once

#include <cstdint>
#include <optional>

#include "resinfo/beliefs.hpp"
#include "resinfo/types.hpp"

namespace resinfo {

/// Outcome of projecting a prior onto the low-ambiguity set of a partition.
struct ResolutionResult {
  double info_nats = 0.0;
  std::optional<DiscreteBelief> achieving_posterior;
  std::optional<std::size_t> binding_region_index;
  bool feasible_at_prior = false;
};

/// Minimum KL update that lifts a region of prior mass p0(A) to posterior
/// mass 1 - epsilon. Only the prior mass enters; the region's shape does not.
/// Requires 0 < prior_mass < 1.
double resolution_info_region(Probability prior_mass, AmbiguityTarget target);

/// The projection posterior: rescales the prior by q / p0(A) on A and by
/// (1 - q) / (1 - p0(A)) outside, with q = max(1 - epsilon, p0(A)).
DiscreteBelief optimal_posterior(const DiscreteBelief& p0, const Region& a, AmbiguityTarget target);

/// Projection onto the union of per-region feasible sets: the cheapest
/// region wins, ties resolving to the lowest region index.
ResolutionResult resolution_info_partition(const DiscreteBelief& p0,
                                           const SemanticPartition& partition,
                                           AmbiguityTarget target);

struct BruteForceConfig {
  int restarts = 10;
  int max_iterations = 20000;
  double objective_tolerance = 1e-10;
  std::uint64_t seed = 0x5eed;
  /// Exhaustive simplex-grid fallback for alphabets <= 4 when descent
  /// fails to converge.
  bool grid_fallback = true;
  int grid_steps = 1000;
};

struct ProjectionEstimate {
  double info_nats = 0.0;
  bool converged = false;
};

/// Numerically minimizes KL(p || p0) over the simplex subject to
/// p(A) >= 1 - epsilon, by exponentiated-gradient descent with random
/// restarts. Independent of the closed form above; alphabet size <= 8.
ProjectionEstimate brute_force_projection(const DiscreteBelief& p0, const Region& a,
                                          AmbiguityTarget target,
                                          const BruteForceConfig& config = {});

}  // namespace resinfo
