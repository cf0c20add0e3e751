#include "fmhnn/dynamics/lyapunov.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fmhnn::dynamics {

Eigen::MatrixXd finite_difference_jacobian(const fode::SystemDef& system,
                                           const Eigen::VectorXd& x) {
  const int dim = system.dimension;
  const double step = 1e-6;
  Eigen::MatrixXd jac(dim, dim);
  Eigen::VectorXd xp = x, xm = x, fp(dim), fm(dim);
  for (int c = 0; c < dim; ++c) {
    xp[c] += step;
    xm[c] -= step;
    system.rhs(0.0, xp, fp);
    system.rhs(0.0, xm, fm);
    jac.col(c) = (fp - fm) / (2.0 * step);
    xp[c] = x[c];
    xm[c] = x[c];
  }
  return jac;
}

LyapunovSpectrum lyapunov_spectrum(const fode::SystemDef& system, double alpha,
                                   const Eigen::VectorXd& x0, const fode::SolverConfig& cfg,
                                   int renorm_interval) {
  if (renorm_interval < 1) {
    throw std::invalid_argument("lyapunov_spectrum: renorm_interval must be >= 1");
  }
  const fode::FractionalOrder order(alpha);
  const auto base = fode::solve_abm(system, x0, order, cfg);
  if (base.diverged()) {
    throw fode::IntegrationError("lyapunov_spectrum: base trajectory diverged",
                                 static_cast<std::size_t>(*base.diverged_at));
  }

  const int dim = system.dimension;
  const double h = cfg.step_size;
  const auto jac_at = [&](Eigen::Index row) {
    if (system.jacobian) {
      Eigen::MatrixXd j(dim, dim);
      (*system.jacobian)(base.states.row(row), j);
      return j;
    }
    return finite_difference_jacobian(system, base.states.row(row));
  };

  const Eigen::Index n_steps = base.size() - 1;
  const Eigen::Index n_windows = n_steps / renorm_interval;
  if (n_windows < 1) {
    throw std::invalid_argument("lyapunov_spectrum: horizon shorter than one window");
  }

  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(dim, dim);
  Eigen::VectorXd log_r = Eigen::VectorXd::Zero(dim);

  fode::SolverConfig wcfg = cfg;
  wcfg.t_end = renorm_interval * h;
  // the bundle is renormalized, so runaway growth within a window is real
  wcfg.divergence_threshold = 1e12;

  for (Eigen::Index w = 0; w < n_windows; ++w) {
    const Eigen::Index base_row = w * renorm_interval;
    fode::SystemDef variational;
    variational.dimension = dim * dim;
    variational.name = "variational";
    variational.rhs = [&, base_row](double t, const Eigen::VectorXd& v, Eigen::VectorXd& dv) {
      const auto row = base_row + static_cast<Eigen::Index>(std::llround(t / h));
      const Eigen::MatrixXd j = jac_at(std::min(row, base.size() - 1));
      const Eigen::Map<const Eigen::MatrixXd> vm(v.data(), dim, dim);
      Eigen::Map<Eigen::MatrixXd>(dv.data(), dim, dim) = j * vm;
    };

    Eigen::VectorXd v0 = Eigen::Map<const Eigen::VectorXd>(q.data(), dim * dim);
    const auto vt = fode::solve_abm(variational, v0, order, wcfg);
    if (vt.diverged()) {
      throw fode::IntegrationError("lyapunov_spectrum: tangent bundle diverged",
                                   static_cast<std::size_t>(base_row));
    }
    const Eigen::VectorXd v_flat = vt.states.row(vt.size() - 1);
    Eigen::MatrixXd v_end = Eigen::Map<const Eigen::MatrixXd>(v_flat.data(), dim, dim);

    Eigen::HouseholderQR<Eigen::MatrixXd> qr(v_end);
    Eigen::MatrixXd qm = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
    const Eigen::MatrixXd rm = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
      const double rii = rm(i, i);
      log_r[i] += std::log(std::abs(rii));
      if (rii < 0.0) {
        qm.col(i) = -qm.col(i);
      }
    }
    q = qm;
  }

  LyapunovSpectrum out;
  out.renorm_interval = renorm_interval;
  out.step_size = h;
  out.horizon = static_cast<double>(n_windows * renorm_interval) * h;
  out.exponents.resize(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    out.exponents[static_cast<std::size_t>(i)] = log_r[i] / out.horizon;
  }
  std::sort(out.exponents.rbegin(), out.exponents.rend());
  return out;
}

}  // namespace fmhnn::dynamics
