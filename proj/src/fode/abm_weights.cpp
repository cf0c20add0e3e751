#include "fmhnn/fode/abm_weights.hpp"

#include <cmath>
#include <stdexcept>

namespace fmhnn::fode {
namespace detail {

double power_difference(double m, double alpha) {
  if (m < 8.0) {
    return std::pow(m + 1.0, alpha) - std::pow(m, alpha);
  }
  // m^a * ((1 + 1/m)^a - 1), expm1/log1p keep ~full precision for large m
  return std::pow(m, alpha) * std::expm1(alpha * std::log1p(1.0 / m));
}

double second_power_difference(double i, double g) {
  if (i < 8.0) {
    return std::pow(i + 1.0, g) + std::pow(i - 1.0, g) - 2.0 * std::pow(i, g);
  }
  const double up = std::expm1(g * std::log1p(1.0 / i));
  const double dn = std::expm1(g * std::log1p(-1.0 / i));
  return std::pow(i, g) * (up + dn);
}

std::vector<double> predictor_kernel(double alpha, std::size_t length) {
  std::vector<double> k(length);
  for (std::size_t m = 0; m < length; ++m) {
    k[m] = power_difference(static_cast<double>(m), alpha);
  }
  return k;
}

std::vector<double> corrector_kernel(double alpha, std::size_t length) {
  std::vector<double> k(length);
  for (std::size_t u = 0; u < length; ++u) {
    k[u] = second_power_difference(static_cast<double>(u + 1), alpha + 1.0);
  }
  return k;
}

double corrector_a0(double n, double alpha) {
  return std::pow(n, alpha + 1.0) - (n - alpha) * std::pow(n + 1.0, alpha);
}

}  // namespace detail

std::pair<std::vector<double>, std::vector<double>> abm_weights(const FractionalOrder& order,
                                                                std::size_t n_steps) {
  if (n_steps < 1) {
    throw std::invalid_argument("abm_weights: n_steps must be >= 1");
  }
  const double a = order.value();
  const double n = static_cast<double>(n_steps);

  std::vector<double> predictor(n_steps);
  for (std::size_t j = 0; j < n_steps; ++j) {
    // lag m = n - 1 - j
    predictor[j] = detail::power_difference(n - 1.0 - static_cast<double>(j), a) / a;
  }

  std::vector<double> corrector(n_steps + 1);
  corrector[0] = detail::corrector_a0(n - 1.0, a);
  for (std::size_t j = 1; j < n_steps; ++j) {
    corrector[j] = detail::second_power_difference(n - static_cast<double>(j), a + 1.0);
  }
  corrector[n_steps] = 1.0;
  return {std::move(predictor), std::move(corrector)};
}

}  // namespace fmhnn::fode
