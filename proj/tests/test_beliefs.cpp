#include "resinfo/beliefs.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

using namespace resinfo;

namespace {

DiscreteBelief random_belief(std::mt19937& gen, std::size_t n, double min_mass = 0.0) {
  std::uniform_real_distribution<double> unif(min_mass, 1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = unif(gen);
    total += x;
  }
  for (auto& x : v) x /= total;
  // Repair the normalization residue in the largest entry.
  double sum = 0.0;
  for (double x : v) sum += x;
  v[0] += 1.0 - sum;
  return DiscreteBelief(v);
}

}  // namespace

TEST_CASE("belief construction validates without renormalizing") {
  CHECK_THROWS_AS(DiscreteBelief({}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteBelief({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteBelief({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteBelief({0.5, std::nan("")}), std::invalid_argument);
  CHECK_NOTHROW(DiscreteBelief({1.0}));
  CHECK_NOTHROW(DiscreteBelief({0.25, 0.25, 0.25, 0.25}));
  // Inside the 1e-12 normalization window.
  CHECK_NOTHROW(DiscreteBelief({0.5, 0.5 + 4e-13}));
  CHECK_THROWS_AS(DiscreteBelief({0.5, 0.5 + 4e-12}), std::invalid_argument);
}

TEST_CASE("partition construction checks disjoint cover") {
  const Region a({0, 1});
  const Region b({2, 3});
  CHECK_NOTHROW(SemanticPartition({a, b}, 4));
  CHECK_THROWS_AS(SemanticPartition({a, b}, 5), std::invalid_argument);   // 4 uncovered
  CHECK_THROWS_AS(SemanticPartition({a, Region({1, 2, 3})}, 4), std::invalid_argument);
  CHECK_THROWS_AS(SemanticPartition({a, b}, 3), std::invalid_argument);   // 3 out of range
  CHECK_THROWS_AS(SemanticPartition({}, 1), std::invalid_argument);

  const SemanticPartition partition({a, b}, 4);
  CHECK(partition.region_of_state() == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("region mass") {
  const DiscreteBelief uniform4({0.25, 0.25, 0.25, 0.25});
  CHECK(region_mass(uniform4, Region({0, 1})).value() == 0.5);

  const DiscreteBelief point({0.0, 0.0, 1.0, 0.0});
  CHECK(region_mass(point, Region({0, 1})).value() == 0.0);

  const DiscreteBelief p({0.1, 0.2, 0.3, 0.4});
  CHECK(region_mass(p, Region({1, 3})).value() == doctest::Approx(0.6).epsilon(1e-15));

  CHECK_THROWS_AS(region_mass(p, Region({4})), std::out_of_range);
  CHECK(region_mass(p, Region()).value() == 0.0);
}

TEST_CASE("ambiguity over a partition") {
  const SemanticPartition halves({Region({0, 1}), Region({2, 3})}, 4);

  const DiscreteBelief point({0.0, 1.0, 0.0, 0.0});
  CHECK(ambiguity(point, halves).value() == 0.0);

  const DiscreteBelief uniform4({0.25, 0.25, 0.25, 0.25});
  CHECK(ambiguity(uniform4, halves).value() == 0.5);
  CHECK(most_likely_region(uniform4, halves) == 0);  // tie breaks low

  const DiscreteBelief p({0.1, 0.2, 0.3, 0.4});
  CHECK(ambiguity(p, halves).value() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(most_likely_region(p, halves) == 1);

  const DiscreteBelief wrong_size({0.5, 0.5});
  CHECK_THROWS_AS(ambiguity(wrong_size, halves), std::invalid_argument);
}

TEST_CASE("region-specific ambiguity") {
  const DiscreteBelief point({0.0, 1.0});
  CHECK(region_ambiguity(point, Region({1})).value() == 0.0);

  const DiscreteBelief uniform5({0.2, 0.2, 0.2, 0.2, 0.2});
  CHECK(region_ambiguity(uniform5, Region({2})).value() == doctest::Approx(0.8).epsilon(1e-15));

  const DiscreteBelief p({0.25, 0.75});
  CHECK(region_ambiguity(p, Region({1})).value() == 0.25);
}

TEST_CASE("kl divergence values and absolute continuity") {
  const DiscreteBelief p({0.9, 0.1});
  const DiscreteBelief q({0.1, 0.9});
  CHECK(kl_divergence(p, p) == 0.0);
  CHECK(kl_divergence(p, q) == doctest::Approx(1.757779661868975506232392).epsilon(1e-14));
  CHECK(kl_divergence(DiscreteBelief({1.0, 0.0}), DiscreteBelief({0.5, 0.5})) ==
        doctest::Approx(0.693147180559945309417232).epsilon(1e-14));
  CHECK(std::isinf(kl_divergence(DiscreteBelief({0.5, 0.5}), DiscreteBelief({1.0, 0.0}))));
  CHECK_THROWS_AS(kl_divergence(p, DiscreteBelief({1.0})), std::invalid_argument);
}

TEST_CASE("binary divergence values and domain") {
  CHECK(binary_divergence(Probability(0.9), Probability(0.1)) ==
        doctest::Approx(1.757779661868975506232392).epsilon(1e-14));
  CHECK(binary_divergence(Probability(0.99), Probability(0.1)) ==
        doctest::Approx(2.224611312865836149738013).epsilon(1e-14));
  CHECK(binary_divergence(Probability(0.37), Probability(0.37)) == 0.0);
  CHECK(binary_divergence(Probability(0.0), Probability(0.25)) ==
        doctest::Approx(-std::log(0.75)).epsilon(1e-14));
  CHECK(binary_divergence(Probability(1.0), Probability(0.25)) ==
        doctest::Approx(-std::log(0.25)).epsilon(1e-14));
  CHECK_THROWS_AS(binary_divergence(Probability(0.5), Probability(0.0)), std::domain_error);
  CHECK_THROWS_AS(binary_divergence(Probability(0.5), Probability(1.0)), std::domain_error);
}

TEST_CASE("binary divergence is strictly increasing above the reference") {
  const Probability r(0.3);
  double prev = binary_divergence(Probability(0.31), r);
  for (double u = 0.35; u < 1.0; u += 0.05) {
    const double cur = binary_divergence(Probability(u), r);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("total variation") {
  const DiscreteBelief p({0.9, 0.1});
  const DiscreteBelief q({0.1, 0.9});
  CHECK(total_variation(p, p).value() == 0.0);
  CHECK(total_variation(DiscreteBelief({1.0, 0.0}), DiscreteBelief({0.0, 1.0})).value() == 1.0);
  CHECK(total_variation(p, q).value() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(total_variation(p, DiscreteBelief({1.0})), std::invalid_argument);
}

TEST_CASE("pinsker inequality on 1000 random pairs") {
  std::mt19937 gen(7031);
  std::uniform_int_distribution<std::size_t> size_dist(2, 10);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = size_dist(gen);
    const DiscreteBelief p = random_belief(gen, n, 1e-3);
    const DiscreteBelief q = random_belief(gen, n, 1e-3);
    const double kl = kl_divergence(p, q);
    const double tv = total_variation(p, q).value();
    CHECK(kl >= 2.0 * tv * tv);
  }
}

TEST_CASE("kl dominates the binary statistic on every region") {
  std::mt19937 gen(9416);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen() % 6);
    const DiscreteBelief p = random_belief(gen, n, 1e-3);
    const DiscreteBelief q = random_belief(gen, n, 1e-3);
    std::vector<std::size_t> members;
    for (std::size_t s = 0; s < n; ++s) {
      if (gen() % 2 == 0) members.push_back(s);
    }
    if (members.empty() || members.size() == n) continue;
    const Region a(members);
    const double kl = kl_divergence(p, q);
    const double dbin = binary_divergence(region_mass(p, a), region_mass(q, a));
    CHECK(kl >= dbin - 1e-12);
  }
}

TEST_CASE("partition ambiguity equals the minimum region ambiguity") {
  std::mt19937 gen(3310);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(gen() % 5);
    const DiscreteBelief p = random_belief(gen, n);
    // Random two-block partition.
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t s = 0; s < n; ++s) {
      (gen() % 2 == 0 ? left : right).push_back(s);
    }
    if (left.empty() || right.empty()) continue;
    const SemanticPartition partition({Region(left), Region(right)}, n);
    const double direct = ambiguity(p, partition).value();
    const double via_regions = std::min(region_ambiguity(p, Region(left)).value(),
                                        region_ambiguity(p, Region(right)).value());
    CHECK(direct == doctest::Approx(via_regions).epsilon(1e-15));
  }
}

TEST_CASE("kl divergence is zero iff the beliefs coincide") {
  std::mt19937 gen(151);
  for (int i = 0; i < 100; ++i) {
    const DiscreteBelief p = random_belief(gen, 5, 1e-3);
    const DiscreteBelief q = random_belief(gen, 5, 1e-3);
    CHECK(kl_divergence(p, p) <= 1e-12);
    const double tv = total_variation(p, q).value();
    if (tv > 1e-6) {
      CHECK(kl_divergence(p, q) > 1e-12);
    }
  }
}
