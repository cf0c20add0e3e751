#include "fmhnn/stability/char_poly.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fmhnn::stability {

namespace {
constexpr double kPi = std::numbers::pi;

double zero_tolerance(const std::vector<std::complex<double>>& eigs) {
  double scale = 0.0;
  for (const auto& e : eigs) {
    scale = std::max(scale, std::abs(e));
  }
  return 1e-12 * std::max(1.0, scale);
}
}  // namespace

CharPoly2N char_poly_two_neuron(const models::FmhnnParams& p, double delta) {
  const double kd = p.k * delta;
  CharPoly2N cp;
  cp.tau = p.b1 + p.b4 + 2.0 * (kd - 1.0);
  // determinant of the 2x2 block; the k^2 delta^2 cross terms cancel exactly
  cp.eta = (1.0 - p.b1) * (1.0 - p.b4) - p.b2 * p.b3 + (p.b1 + p.b2 + p.b3 + p.b4 - 2.0) * kd;
  return cp;
}

std::vector<std::complex<double>> eigenvalues_at_equilibrium(const models::FmhnnParams& p,
                                                             double delta) {
  const auto [tau, eta] = char_poly_two_neuron(p, delta);
  const double disc = tau * tau - 4.0 * eta;
  std::vector<std::complex<double>> eigs(3);
  eigs[0] = 0.0;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // cancellation-safe pairing: the larger-magnitude root first
    const double r1 = (tau >= 0.0) ? 0.5 * (tau + root) : 0.5 * (tau - root);
    const double r2 = (r1 != 0.0) ? eta / r1 : 0.5 * (tau + ((tau >= 0.0) ? -root : root));
    eigs[1] = r1;
    eigs[2] = r2;
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    eigs[1] = {0.5 * tau, im};
    eigs[2] = {0.5 * tau, -im};
  }
  return eigs;
}

Verdict matignon_check(const std::vector<std::complex<double>>& eigs, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("matignon_check: alpha must lie in (0, 1]");
  }
  const double tol = zero_tolerance(eigs);
  const double sector = alpha * kPi / 2.0;
  bool marginal = false;
  for (const auto& e : eigs) {
    if (std::abs(e) <= tol) {
      marginal = true;
      continue;
    }
    const double a = std::abs(std::arg(e));
    if (a < sector - 1e-14) {
      return Verdict::unstable;
    }
    if (a <= sector + 1e-14) {
      marginal = true;
    }
  }
  return marginal ? Verdict::marginal : Verdict::stable;
}

CriticalAlpha critical_alpha(const std::vector<std::complex<double>>& eigs) {
  if (eigs.empty()) {
    throw std::domain_error("critical_alpha: empty eigenvalue list");
  }
  const double tol = zero_tolerance(eigs);
  double min_arg = std::numeric_limits<double>::infinity();
  for (const auto& e : eigs) {
    if (std::abs(e) <= tol) {
      continue;
    }
    min_arg = std::min(min_arg, std::abs(std::arg(e)));
  }
  if (!std::isfinite(min_arg)) {
    // only zero eigenvalues present: the sector test never fails strictly
    return {CriticalKind::stable_for_all, 1.0};
  }
  if (min_arg < 1e-14) {
    return {CriticalKind::unstable_for_all, 0.0};
  }
  if (min_arg >= kPi / 2.0) {
    return {CriticalKind::stable_for_all, 1.0};
  }
  return {CriticalKind::value, 2.0 * min_arg / kPi};
}

RegionReport classify_region(const models::FmhnnParams& p, double delta, double alpha) {
  if (p.k == 0.0) {
    throw std::domain_error("classify_region: undefined for k = 0");
  }
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("classify_region: alpha must lie in (0, 1]");
  }
  const auto [tau, eta] = char_poly_two_neuron(p, delta);
  const double scale = std::abs((1.0 - p.b1) * (1.0 - p.b4)) + std::abs(p.b2 * p.b3) +
                       std::abs((p.b1 + p.b2 + p.b3 + p.b4 - 2.0) * p.k * delta);
  const double tol = 1e-9 * std::max(1.0, scale);

  if (eta < -tol) {
    return {RegionCase::case5, Verdict::unstable};
  }
  if (std::abs(eta) <= tol) {
    // boundary eta = 0: a zero root plus -tau
    return {RegionCase::case1, tau < 0.0 ? Verdict::stable : Verdict::unstable};
  }
  if (std::abs(tau) <= tol) {
    // purely imaginary pair: inside the sector for every alpha < 1
    return {RegionCase::case2, alpha < 1.0 ? Verdict::stable : Verdict::marginal};
  }
  if (tau < 0.0) {
    return {RegionCase::case3, Verdict::stable};
  }
  if (eta > tau * tau / 4.0) {
    const bool ok = std::cos(alpha * kPi / 2.0) > tau / (2.0 * std::sqrt(eta));
    return {RegionCase::case4, ok ? Verdict::stable : Verdict::unstable};
  }
  // real roots with positive sum and product
  return {RegionCase::case5, Verdict::unstable};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::marginal: return "marginal";
    case Verdict::unstable: return "unstable";
  }
  return "?";
}

const char* to_string(RegionCase c) {
  switch (c) {
    case RegionCase::case1: return "case1";
    case RegionCase::case2: return "case2";
    case RegionCase::case3: return "case3";
    case RegionCase::case4: return "case4";
    case RegionCase::case5: return "case5";
  }
  return "?";
}

double lipschitz_bound(const models::FmhnnParams& p, double phi_cap) {
  if (phi_cap < 0.0) {
    throw std::invalid_argument("lipschitz_bound: phi_cap must be >= 0");
  }
  Eigen::Matrix3d a, b, k;
  a << -1, 0, 0, 0, -1, 0, 1, -1, 0;
  b << p.b1, p.b2, 0, p.b3, p.b4, 0, 0, 0, 0;
  k << p.k, -p.k, 0, -p.k, p.k, 0, 0, 0, 0;
  const auto norm2 = [](const Eigen::Matrix3d& m) {
    return Eigen::JacobiSVD<Eigen::Matrix3d>(m).singularValues()[0];
  };
  return norm2(a) + norm2(b) + phi_cap * norm2(k);
}

}  // namespace fmhnn::stability
