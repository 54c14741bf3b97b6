#include "resinfo/special_functions.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace resinfo;

namespace {

// Reference values computed ahead of the build with mpmath at 50 digits.
struct CdfPoint {
  double x;
  double phi;
};

constexpr CdfPoint kCdfTable[] = {
    {0.5, 0.691462461274013103637704610608},
    {1.0, 0.841344746068542948585232545632},
    {1.7, 0.955434537241456960512566995292},
    {2.13, 0.98341419331639498704092956708},
    {-2.13, 0.0165858066836050129590704329199},
    {3.0, 0.998650101968369905473348185232},
    {4.2, 0.999986654250984093661646907882},
    {5.0, 0.999999713348428120806088326248},
    {6.0, 0.999999999013412354962301859299},
    {8.0, 0.999999999999999377903942572822},
    {-1.0, 0.158655253931457051414767454368},
    {-3.0, 0.00134989803163009452665181476759},
    {0.46875, 0.680375828482882373963141347493},
    {4.0, 0.999968328758166880078746229243},
};

struct TailPoint {
  double x;
  double phi;
};

constexpr TailPoint kTailTable[] = {
    {-8.0, 6.22096057427178412351599517259e-16},
    {-10.0, 7.6198530241605260659733432516e-24},
    {-15.0, 3.67096619931275088578608965533e-51},
    {-20.0, 2.75362411860623369507562278086e-89},
    {-30.0, 4.90671392714818705953380925658e-198},
    {-37.0, 5.72557122252457682268319254827e-300},
};

// Independent inversion of the implemented CDF, used to check the quantile.
double bisect_quantile(double p) {
  double lo = -40.0;
  double hi = 40.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (std_normal_cdf(mid).value() < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("probability and ambiguity-target invariants") {
  CHECK_THROWS_AS(Probability(-0.1), std::domain_error);
  CHECK_THROWS_AS(Probability(1.2), std::domain_error);
  CHECK_THROWS_AS(Probability(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(Probability(0.6, 0.6), std::domain_error);
  CHECK(Probability(0.25).value() == 0.25);
  CHECK(Probability(0.25).complement() == 0.75);
  CHECK(Probability(1.0, 0.0).complement() == 0.0);

  CHECK_THROWS_AS(AmbiguityTarget(1.0), std::domain_error);
  CHECK_THROWS_AS(AmbiguityTarget(-0.01), std::domain_error);
  CHECK(AmbiguityTarget(0.0).epsilon() == 0.0);
  const Probability q = AmbiguityTarget(1e-18).posterior_mass();
  CHECK(q.complement() == 1e-18);
}

TEST_CASE("normal cdf matches high-precision references") {
  CHECK(std_normal_cdf(0.0).value() == 0.5);
  for (const auto& pt : kCdfTable) {
    CHECK(std::fabs(std_normal_cdf(pt.x).value() - pt.phi) <= 1e-15);
  }
  // Tail values carry relative accuracy through the complement.
  for (const auto& pt : kTailTable) {
    const double got = std_normal_cdf(pt.x).value();
    CHECK(std::fabs(got - pt.phi) <= 1e-13 * pt.phi);
    CHECK(std_normal_cdf(-pt.x).complement() == got);
  }
}

TEST_CASE("normal cdf symmetry and reflection") {
  for (double x = 0.0; x <= 8.0; x += 0.01) {
    const double sum = std_normal_cdf(x).value() + std_normal_cdf(-x).value();
    CHECK(std::fabs(sum - 1.0) <= 1e-14);
  }
  // Reflection identity at x = 1.7.
  CHECK(std_normal_cdf(-1.7).value() ==
        doctest::Approx(1.0 - 0.955434537241456960512566995292).epsilon(1e-13));
}

TEST_CASE("normal cdf is monotone on a fine grid") {
  double prev = 0.0;
  bool first = true;
  for (double x = -8.5; x <= 8.5; x += 1.0 / 512.0) {
    const double v = std_normal_cdf(x).value();
    if (!first) CHECK(v >= prev);
    prev = v;
    first = false;
  }
}

TEST_CASE("normal cdf saturates beyond the tail cutoff") {
  CHECK(std_normal_cdf(39.0).value() == 1.0);
  CHECK(std_normal_cdf(39.0).complement() == 0.0);
  CHECK(std_normal_cdf(-39.0).value() == 0.0);
  CHECK_THROWS_AS(std_normal_cdf(std::nan("")), std::domain_error);
}

TEST_CASE("normal quantile matches references and the bisection oracle") {
  CHECK(std_normal_quantile(Probability(0.5)) == 0.0);
  CHECK(std_normal_quantile(Probability(0.9)) ==
        doctest::Approx(1.28155156554460046696510332945).epsilon(1e-14));
  CHECK(std_normal_quantile(Probability(0.975)) ==
        doctest::Approx(1.95996398454005423552459443052).epsilon(1e-14));
  for (double p : {0.9, 0.975, 0.3, 0.05, 1e-6}) {
    CHECK(std::fabs(std_normal_quantile(Probability(p)) - bisect_quantile(p)) <= 1e-9);
  }
}

TEST_CASE("normal quantile rejects the closed endpoints") {
  CHECK_THROWS_AS(std_normal_quantile(Probability(0.0)), std::domain_error);
  CHECK_THROWS_AS(std_normal_quantile(Probability(1.0)), std::domain_error);
}

TEST_CASE("cdf/quantile round trip on the [-6, 6] grid") {
  for (int i = -600; i <= 600; ++i) {
    const double x = static_cast<double>(i) * 0.01;
    const double back = std_normal_quantile(std_normal_cdf(x));
    CHECK(std::fabs(back - x) <= 1e-9);
  }
}

TEST_CASE("quantile/cdf forward trip stays within 1e-12") {
  for (int i = 1; i < 1000; ++i) {
    const double p = static_cast<double>(i) * 1e-3;
    const double forward = std_normal_cdf(std_normal_quantile(Probability(p))).value();
    CHECK(std::fabs(forward - p) <= 1e-12);
  }
  for (double p : {1e-6, 1e-9, 1e-12}) {
    const double forward = std_normal_cdf(std_normal_quantile(Probability(p))).value();
    CHECK(std::fabs(forward - p) <= 1e-12);
  }
}

TEST_CASE("log1p_safe and xlogx behave at the edges") {
  CHECK(xlogx(0.0) == 0.0);
  CHECK(xlogx(1.0) == 0.0);
  CHECK(xlogx(0.5) == doctest::Approx(-0.34657359027997265471).epsilon(1e-15));
  CHECK_THROWS_AS(xlogx(-0.1), std::domain_error);

  CHECK(log1p_safe(1e-12) ==
        doctest::Approx(9.99999999999500000000000333333e-13).epsilon(1e-15));
  CHECK(log1p_safe(0.0) == 0.0);
  CHECK_THROWS_AS(log1p_safe(-1.0), std::domain_error);
  CHECK_THROWS_AS(log1p_safe(-2.0), std::domain_error);
}
