#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fmhnn/fode/types.hpp"

namespace fmhnn::fode {

/// Quadrature weights of the fractional Adams scheme for the step that
/// produces x_n with n = n_steps, on a unit grid (h = 1):
///
/// predictor[j] = (1/alpha) * ((n-j)^alpha - (n-1-j)^alpha),  j = 0..n-1
/// corrector[0] = (n-1)^(alpha+1) - (n-1-alpha) n^alpha
/// corrector[j] = (n-j+1)^(alpha+1) + (n-j-1)^(alpha+1) - 2 (n-j)^(alpha+1), 0 < j < n
/// corrector[n] = 1
///
/// For step size h the scheme applies these as
///   x_pred = x0 + (h^alpha / Gamma(alpha))   * sum_j predictor[j] f_j
///   x_corr = x0 + (h^alpha / Gamma(alpha+2)) * sum_j corrector[j] f_j
/// At alpha = 1 they collapse to the rectangle and trapezoid rules.
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> abm_weights(
    const FractionalOrder& order, std::size_t n_steps);

namespace detail {

/// (m+1)^alpha - m^alpha without cancellation for large m.
[[nodiscard]] double power_difference(double m, double alpha);

/// (i+1)^g - 2 i^g + (i-1)^g for i >= 1, cancellation-safe second difference.
[[nodiscard]] double second_power_difference(double i, double g);

/// Predictor convolution kernel on a unit grid: kernel[m] = (m+1)^a - m^a.
[[nodiscard]] std::vector<double> predictor_kernel(double alpha, std::size_t length);

/// Corrector convolution kernel: kernel[u] = c_{u+1} with
/// c_i = (i+1)^(a+1) - 2 i^(a+1) + (i-1)^(a+1).
[[nodiscard]] std::vector<double> corrector_kernel(double alpha, std::size_t length);

/// Initial-point corrector weight a_{0,n+1} = n^(a+1) - (n-a)(n+1)^a.
[[nodiscard]] double corrector_a0(double n, double alpha);

}  // namespace detail
}  // namespace fmhnn::fode
