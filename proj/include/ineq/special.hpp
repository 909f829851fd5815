#pragma once

#include <span>

namespace ineq::special {

/// Stable evaluation of log(1 + exp(t)) for any finite t.
/// Monotone in t; never overflows.
double log1p_exp(double t);

/// Power mean of order r: ((sum v_i^r)/k)^(1/r), overflow-safe.
///
/// Values must be nonnegative and r nonzero. For r < 0 a zero value
/// yields 0, the continuous limit as any argument approaches 0+.
double power_mean(std::span<const double> values, double order);

/// log Gamma(x) for x > 0 (Lanczos approximation).
double ln_gamma(double x);

/// Digamma psi(x) for x > 0 (upward recurrence + asymptotic series).
double digamma(double x);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series branch for x < a + 1, continued fraction otherwise.
double reg_gamma_lower(double a, double x);

/// Inverse standard normal CDF for prob in (0, 1).
double normal_quantile(double prob);

}  // namespace ineq::special
