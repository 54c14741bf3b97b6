#pragma once

#include "resinfo/types.hpp"

namespace resinfo {

/// Standard normal CDF Phi(x).
///
/// erfc-based, so both the returned value and its complement retain full
/// relative accuracy in the respective tail. Saturates to exactly 0/1 for
/// |x| > 38 (beyond double resolution). Throws std::domain_error on NaN.
Probability std_normal_cdf(double x);

/// Standard normal density phi(x) = exp(-x^2/2) / sqrt(2*pi).
double std_normal_pdf(double x);

/// Inverse standard normal CDF Phi^{-1}(p) for p in (0, 1).
///
/// Rational initial approximation (AS 241) refined by one Newton step
/// against std_normal_cdf, so the pair inverts consistently.
/// Throws std::domain_error for p in {0, 1}.
double std_normal_quantile(Probability p);

/// log(1 + x) for x > -1, accurate near zero.
double log1p_safe(double x);

/// u * log(u) with xlogx(0) = 0; requires u >= 0.
double xlogx(double u);

}  // namespace resinfo
