#include "resinfo/beliefs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace resinfo {
namespace {

constexpr double kNormalizationTol = 1e-12;

// Neumaier-compensated sum; the validation tolerance is tighter than what a
// naive accumulation guarantees on long vectors.
double stable_sum(const std::vector<double>& values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

void check_same_alphabet(const DiscreteBelief& p, const DiscreteBelief& q, const char* op) {
  if (p.size() != q.size()) {
    throw std::invalid_argument(std::string(op) + ": alphabet size mismatch (" +
                                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + ")");
  }
}

}  // namespace

DiscreteBelief::DiscreteBelief(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("DiscreteBelief: alphabet must contain at least one state");
  }
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!(probs_[i] >= 0.0)) {
      throw std::invalid_argument("DiscreteBelief: negative or NaN entry at index " +
                                  std::to_string(i));
    }
  }
  const double sum = stable_sum(probs_);
  if (std::fabs(sum - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("DiscreteBelief: entries sum to " + std::to_string(sum) +
                                ", not 1 within 1e-12");
  }
}

Region::Region(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Region::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

SemanticPartition::SemanticPartition(std::vector<Region> regions, std::size_t alphabet_size)
    : regions_(std::move(regions)), alphabet_size_(alphabet_size) {
  if (regions_.empty()) {
    throw std::invalid_argument("SemanticPartition: at least one region is required");
  }
  if (alphabet_size_ == 0) {
    throw std::invalid_argument("SemanticPartition: alphabet size must be positive");
  }
  const std::size_t unassigned = std::numeric_limits<std::size_t>::max();
  region_of_state_.assign(alphabet_size_, unassigned);
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    for (std::size_t s : regions_[r].members()) {
      if (s >= alphabet_size_) {
        throw std::invalid_argument("SemanticPartition: state index " + std::to_string(s) +
                                    " out of range for alphabet of size " +
                                    std::to_string(alphabet_size_));
      }
      if (region_of_state_[s] != unassigned) {
        throw std::invalid_argument("SemanticPartition: state " + std::to_string(s) +
                                    " appears in more than one region");
      }
      region_of_state_[s] = r;
    }
  }
  for (std::size_t s = 0; s < alphabet_size_; ++s) {
    if (region_of_state_[s] == unassigned) {
      throw std::invalid_argument("SemanticPartition: state " + std::to_string(s) +
                                  " is not covered by any region");
    }
  }
}

Probability region_mass(const DiscreteBelief& p, const Region& a) {
  double mass = 0.0;
  for (std::size_t s : a.members()) {
    if (s >= p.size()) {
      throw std::out_of_range("region_mass: state index " + std::to_string(s) +
                              " out of range for alphabet of size " + std::to_string(p.size()));
    }
    mass += p[s];
  }
  return Probability(std::min(mass, 1.0));
}

Probability ambiguity(const DiscreteBelief& p, const SemanticPartition& partition) {
  const std::size_t best = most_likely_region(p, partition);
  const double max_mass = region_mass(p, partition.regions()[best]).value();
  return Probability(1.0 - max_mass, max_mass);
}

std::size_t most_likely_region(const DiscreteBelief& p, const SemanticPartition& partition) {
  if (partition.alphabet_size() != p.size()) {
    throw std::invalid_argument("ambiguity: partition alphabet size " +
                                std::to_string(partition.alphabet_size()) +
                                " does not match belief size " + std::to_string(p.size()));
  }
  std::size_t best = 0;
  double best_mass = -1.0;
  for (std::size_t r = 0; r < partition.region_count(); ++r) {
    const double mass = region_mass(p, partition.regions()[r]).value();
    if (mass > best_mass) {
      best_mass = mass;
      best = r;
    }
  }
  return best;
}

Probability region_ambiguity(const DiscreteBelief& p, const Region& a) {
  const double mass = region_mass(p, a).value();
  return Probability(1.0 - mass, mass);
}

double kl_divergence(const DiscreteBelief& p, const DiscreteBelief& q) {
  check_same_alphabet(p, q, "kl_divergence");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(sum, 0.0);
}

double binary_divergence(Probability u, Probability r) {
  if (r.value() <= 0.0 || r.value() >= 1.0 || r.complement() <= 0.0) {
    throw std::domain_error("binary_divergence: reference probability must lie in (0, 1)");
  }
  double sum = 0.0;
  if (u.value() > 0.0) sum += u.value() * std::log(u.value() / r.value());
  if (u.complement() > 0.0) sum += u.complement() * std::log(u.complement() / r.complement());
  return std::max(sum, 0.0);
}

Probability total_variation(const DiscreteBelief& p, const DiscreteBelief& q) {
  check_same_alphabet(p, q, "total_variation");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += std::fabs(p[i] - q[i]);
  }
  return Probability(std::min(0.5 * sum, 1.0));
}

}  // namespace resinfo
