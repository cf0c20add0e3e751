#include "fmhnn/models/ring.hpp"

#include <cmath>

namespace fmhnn::models {

namespace {
void check_state(const Eigen::VectorXd& state, const RingParams& rp) {
  rp.validate();
  if (state.size() != ring_dimension(rp)) {
    throw std::invalid_argument("ring state length must be 3n");
  }
}
}  // namespace

Eigen::VectorXd rhs_ring(const Eigen::VectorXd& state, const RingParams& rp) {
  check_state(state, rp);
  const int n = rp.n;
  const double w = rp.d / (2.0 * rp.p);
  Eigen::VectorXd out(3 * n);
  for (int i = 0; i < n; ++i) {
    const FmhnnState s{state[3 * i], state[3 * i + 1], state[3 * i + 2]};
    Eigen::Vector3d local = rhs_two_neuron(s, rp.base);
    double coupling = 0.0;
    for (int off = -rp.p; off <= rp.p; ++off) {
      const int j = ((i + off) % n + n) % n;
      coupling += state[3 * j] - s.x1;
    }
    out[3 * i] = local[0] + w * coupling;
    out[3 * i + 1] = local[1];
    out[3 * i + 2] = local[2];
  }
  return out;
}

Eigen::MatrixXd jacobian_ring(const Eigen::VectorXd& state, const RingParams& rp) {
  check_state(state, rp);
  const int n = rp.n;
  const double w = rp.d / (2.0 * rp.p);
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  for (int i = 0; i < n; ++i) {
    const FmhnnState s{state[3 * i], state[3 * i + 1], state[3 * i + 2]};
    jac.block<3, 3>(3 * i, 3 * i) = jacobian_two_neuron(s, rp.base);
    jac(3 * i, 3 * i) -= rp.d;
    for (int off = -rp.p; off <= rp.p; ++off) {
      if (off == 0) {
        continue;
      }
      const int j = ((i + off) % n + n) % n;
      jac(3 * i, 3 * j) += w;
    }
  }
  return jac;
}

fode::SystemDef make_ring_system(const RingParams& rp) {
  rp.validate();
  fode::SystemDef def;
  def.dimension = ring_dimension(rp);
  def.name = "ring";
  def.rhs = [rp](double, const Eigen::VectorXd& x, Eigen::VectorXd& dx) { dx = rhs_ring(x, rp); };
  def.jacobian = [rp](const Eigen::VectorXd& x, Eigen::MatrixXd& jac) { jac = jacobian_ring(x, rp); };
  return def;
}

}  // namespace fmhnn::models
