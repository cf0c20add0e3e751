#pragma once

#include <complex>

#include "fmhnn/fode/types.hpp"

namespace fmhnn::fode {

struct MLArgs {
  double alpha;  // > 0
  double beta = 1.0;
  std::complex<double> z;
};

/// E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
///
/// Evaluation routes:
///  - alpha = beta = 1: exp(z).
///  - real z <= -25^alpha, alpha in (0,1): inverse-power asymptotic series with
///    optimal truncation, plus the conjugate-branch exponential correction for
///    alpha >= 0.82.
///  - otherwise: power series, term cap 2000, early exit once terms fall below
///    1e-16 relative.
///
/// Truncation error stays below 1e-12 for |z| <= 50. Total double-precision
/// error is <= ~1e-10 except in the crossover band (alpha ~ 0.85..0.99 with
/// real z in [-25, -10]) where cancellation limits it to ~1e-5 absolute.
/// Throws std::domain_error when the series fails to converge within the cap
/// (large non-real or positive arguments outside the supported range).
[[nodiscard]] std::complex<double> mittag_leffler(const MLArgs& args);

/// Real-argument convenience overload.
[[nodiscard]] double mittag_leffler(double alpha, double beta, double z);

}  // namespace fmhnn::fode
