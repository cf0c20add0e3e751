#pragma once

#include <vector>

#include "fmhnn/fode/solver.hpp"

namespace fmhnn::dynamics {

/// Finite-time Lyapunov exponents under the fractional scheme, sorted
/// descending, with the method parameters echoed.
struct LyapunovSpectrum {
  std::vector<double> exponents;
  int renorm_interval = 0;
  double horizon = 0.0;
  double step_size = 0.0;
};

/// Benettin QR method. The base trajectory is one full-memory solve; the
/// tangent bundle follows the Jacobian-driven variational system discretized
/// with the same predictor-corrector, restarted at each renormalization
/// window (rescaling the bundle invalidates its convolution history, so each
/// window is a fresh Caputo problem; at alpha = 1 the scheme is one-step and
/// the restart is exact). Uses the analytic Jacobian when the system has one,
/// otherwise a central finite difference of the rhs.
///
/// Throws IntegrationError carrying the divergence index when the base
/// trajectory diverges.
[[nodiscard]] LyapunovSpectrum lyapunov_spectrum(const fode::SystemDef& system, double alpha,
                                                 const Eigen::VectorXd& x0,
                                                 const fode::SolverConfig& cfg,
                                                 int renorm_interval);

/// Central finite-difference Jacobian of a system rhs (step 1e-6).
[[nodiscard]] Eigen::MatrixXd finite_difference_jacobian(const fode::SystemDef& system,
                                                         const Eigen::VectorXd& x);

}  // namespace fmhnn::dynamics
