#include "fmhnn/fode/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace fmhnn::fode {
namespace {

constexpr int kTermCap = 2000;
constexpr double kPi = std::numbers::pi;

// 1/Gamma(x) for any real x; exactly zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x) {
  const double r = std::round(x);
  if (r <= 0.0 && std::abs(x - r) < 1e-12) {
    return 0.0;
  }
  if (x > 0.5) {
    if (x > 171.5) {
      return 0.0;
    }
    return 1.0 / std::tgamma(x);
  }
  return std::sin(kPi * x) * std::tgamma(1.0 - x) / kPi;
}

std::complex<double> series(double alpha, double beta, std::complex<double> z) {
  std::complex<double> sum(reciprocal_gamma(beta), 0.0);
  std::complex<double> zk(1.0, 0.0);
  for (int k = 1; k <= kTermCap; ++k) {
    zk *= z;
    if (!std::isfinite(zk.real()) || !std::isfinite(zk.imag())) {
      throw std::domain_error("mittag_leffler: series overflow, argument outside supported range");
    }
    const std::complex<double> term = zk * reciprocal_gamma(alpha * k + beta);
    sum += term;
    if (std::abs(term) <= 1e-16 * (1.0 + std::abs(sum)) && k > 3) {
      return sum;
    }
  }
  throw std::domain_error("mittag_leffler: series did not converge within the term cap");
}

// Real z << 0: E ~ -sum_{k>=1} z^{-k} / Gamma(beta - alpha k), optimally
// truncated, with the exponential pair correction near alpha = 1.
double negative_axis_asymptotic(double alpha, double beta, double z) {
  double sum = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  double zk = 1.0;
  for (int k = 1; k <= 400; ++k) {
    zk *= z;
    if (!std::isfinite(zk) || std::abs(zk) > 1e290) {
      break;
    }
    const double c = reciprocal_gamma(beta - alpha * k);
    if (c == 0.0) {
      continue;
    }
    const double term = -c / zk;
    const double mag = std::abs(term);
    if (mag >= prev) {
      break;
    }
    sum += term;
    prev = mag;
  }
  if (alpha >= 0.82 && alpha < 1.0) {
    const double r = std::pow(-z, 1.0 / alpha);
    const double re_w = r * std::cos(kPi / alpha);
    const double im_w = r * std::sin(kPi / alpha);
    if (re_w < 0.0) {
      sum += (2.0 / alpha) * std::pow(r, 1.0 - beta) * std::exp(re_w) *
             std::cos(im_w + (1.0 - beta) * kPi / alpha);
    }
  }
  return sum;
}

}  // namespace

std::complex<double> mittag_leffler(const MLArgs& args) {
  if (!(args.alpha > 0.0)) {
    throw std::domain_error("mittag_leffler: alpha must be positive");
  }
  const bool real_arg = args.z.imag() == 0.0;
  if (args.alpha == 1.0 && args.beta == 1.0) {
    return std::exp(args.z);
  }
  if (real_arg && args.alpha < 1.0 && args.z.real() < 0.0 &&
      -args.z.real() >= std::pow(25.0, args.alpha)) {
    return {negative_axis_asymptotic(args.alpha, args.beta, args.z.real()), 0.0};
  }
  return series(args.alpha, args.beta, args.z);
}

double mittag_leffler(double alpha, double beta, double z) {
  return mittag_leffler(MLArgs{alpha, beta, {z, 0.0}}).real();
}

}  // namespace fmhnn::fode
