#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace resinfo {

/// A probability value in [0, 1].
///
/// Carries both p and 1-p. The complement is what keeps relative accuracy
/// for tail quantities (normal tails, high-confidence targets): 1-p computed
/// from a p that has already rounded to 1.0 loses everything below ~1e-16,
/// while a producer that knows the tail mass can supply it exactly.
class Probability {
 public:
  Probability() = default;

  explicit Probability(double value) : value_(value), complement_(1.0 - value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::domain_error("probability outside [0, 1]: " + std::to_string(value));
    }
  }

  /// Producer-side constructor for tail-accurate pairs (value, 1-value).
  Probability(double value, double complement) : value_(value), complement_(complement) {
    if (!(value >= 0.0 && value <= 1.0) || !(complement >= 0.0 && complement <= 1.0)) {
      throw std::domain_error("probability pair outside [0, 1]");
    }
    if (std::fabs(value + complement - 1.0) > 1e-12) {
      throw std::domain_error("probability pair does not sum to 1");
    }
  }

  double value() const noexcept { return value_; }
  double complement() const noexcept { return complement_; }
  operator double() const noexcept { return value_; }

 private:
  double value_ = 0.0;
  double complement_ = 1.0;
};

/// Cap on accumulated semantic information before a residual floor stops
/// further ambiguity reduction. `bounded == false` marks the ideal case
/// (value is +infinity); `degenerate` marks a floor at or above the initial
/// ambiguity, where the bound collapses to zero.
struct ResolvabilityBound {
  bool bounded = true;
  bool degenerate = false;
  double value = 0.0;
};

/// Target ambiguity level epsilon in [0, 1).
class AmbiguityTarget {
 public:
  explicit AmbiguityTarget(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
      throw std::domain_error("ambiguity target must lie in [0, 1): " + std::to_string(epsilon));
    }
  }

  double epsilon() const noexcept { return epsilon_; }

  /// The required posterior mass q = 1 - epsilon, with exact complement.
  Probability posterior_mass() const { return Probability(1.0 - epsilon_, epsilon_); }

 private:
  double epsilon_;
};

}  // namespace resinfo
