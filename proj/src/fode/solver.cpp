#include "fmhnn/fode/solver.hpp"

#include <cmath>
#include <limits>

#include "fmhnn/fode/abm_weights.hpp"
#include "fmhnn/fode/history_convolution.hpp"

namespace fmhnn::fode {

namespace {

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

std::size_t grid_steps(const SolverConfig& cfg) {
  if (!(cfg.step_size > 0.0) || !(cfg.t_end > 0.0)) {
    throw std::invalid_argument("solver config: step_size and t_end must be positive");
  }
  if (!(cfg.divergence_threshold > 0.0)) {
    throw std::invalid_argument("solver config: divergence_threshold must be positive");
  }
  if (cfg.corrector_iterations < 1) {
    throw std::invalid_argument("solver config: corrector_iterations must be >= 1");
  }
  const double ratio = cfg.t_end / cfg.step_size;
  const double rounded = std::round(ratio);
  constexpr double kMaxSteps = 4194304.0;  // 2^22, memory guard
  if (!(rounded >= 1.0) || rounded > kMaxSteps) {
    throw std::invalid_argument("solver config: grid length out of range");
  }
  if (std::abs(ratio - rounded) > 1e-8 * std::max(1.0, ratio)) {
    throw std::invalid_argument("solver config: t_end is not an integer multiple of step_size");
  }
  return static_cast<std::size_t>(rounded);
}

Trajectory solve_abm(const SystemDef& system, const Eigen::VectorXd& x0,
                     const FractionalOrder& order, const SolverConfig& cfg) {
  if (system.dimension < 1 || !system.rhs) {
    throw std::invalid_argument("solve_abm: system needs a dimension and an rhs");
  }
  if (x0.size() != system.dimension) {
    throw std::invalid_argument("solve_abm: x0 length does not match system dimension");
  }
  const std::size_t n_steps = grid_steps(cfg);
  const int dim = system.dimension;
  const double h = cfg.step_size;
  const double alpha = order.value();

  const double pref_p = std::pow(h, alpha) / std::tgamma(alpha + 1.0);
  const double pref_c = std::pow(h, alpha) / std::tgamma(alpha + 2.0);

  auto kp = detail::predictor_kernel(alpha, n_steps + 1);
  auto kc = detail::corrector_kernel(alpha, n_steps + 1);
  const std::vector<double> kc_copy = kc;  // conv takes ownership below
  HistoryConvolution conv(std::move(kp), std::move(kc), dim, n_steps, cfg.convolution);

  Trajectory out;
  out.step_size = h;
  out.times.resize(static_cast<Eigen::Index>(n_steps) + 1);
  out.states.resize(static_cast<Eigen::Index>(n_steps) + 1, dim);
  for (std::size_t j = 0; j <= n_steps; ++j) {
    out.times[static_cast<Eigen::Index>(j)] = static_cast<double>(j) * h;
  }
  out.states.row(0) = x0;

  Eigen::VectorXd f0(dim), fn(dim), fp(dim), sp(dim), sc(dim), xc(dim);
  system.rhs(0.0, x0, f0);
  if (!all_finite(f0)) {
    throw IntegrationError("rhs returned non-finite values at the initial state", 0);
  }
  fn = f0;

  for (std::size_t n = 0; n < n_steps; ++n) {
    conv.push(fn.data());
    conv.eval(sp.data(), sc.data());

    // replace the u = n corrector term kc[n] f_0 by the initial-point weight
    const double dn = static_cast<double>(n);
    sc += (detail::corrector_a0(dn, alpha) - kc_copy[n]) * f0;

    const double t_next = static_cast<double>(n + 1) * h;
    xc = x0 + pref_p * sp;
    for (int it = 0; it < cfg.corrector_iterations; ++it) {
      if (!all_finite(xc)) {
        break;  // overflow inside the step; handled as divergence below
      }
      system.rhs(t_next, xc, fp);
      if (!all_finite(fp)) {
        if (xc.lpNorm<Eigen::Infinity>() > cfg.divergence_threshold) {
          break;
        }
        throw IntegrationError("rhs returned non-finite values", n + 1);
      }
      xc = x0 + pref_c * (sc + fp);
    }

    const Eigen::Index row = static_cast<Eigen::Index>(n) + 1;
    out.states.row(row) = xc;
    if (!all_finite(xc) || xc.lpNorm<Eigen::Infinity>() > cfg.divergence_threshold) {
      out.diverged_at = row;
      out.times.conservativeResize(row + 1);
      out.states.conservativeResize(row + 1, dim);
      return out;
    }
    system.rhs(t_next, xc, fn);
    if (!all_finite(fn)) {
      throw IntegrationError("rhs returned non-finite values", n + 1);
    }
  }
  return out;
}

}  // namespace fmhnn::fode
