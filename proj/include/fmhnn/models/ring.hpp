#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "fmhnn/models/two_neuron.hpp"

namespace fmhnn::models {

/// Ring of n two-neuron sub-networks, each diffusively coupled on its first
/// membrane potential to p neighbors per side with strength d. State layout is
/// sub-network-major: [x1_1, x2_1, phi_1, x1_2, ...] — the same order used in
/// CSV columns and solver state everywhere.
struct RingParams {
  FmhnnParams base;
  int n = 5;
  int p = 1;
  double d = 0.5;

  void validate() const {
    if (n < 2 || p < 1 || d < 0.0 || 2 * p >= n) {
      throw std::invalid_argument("ring params require n >= 2, p >= 1, d >= 0, 2p < n");
    }
  }
};

[[nodiscard]] inline int ring_dimension(const RingParams& rp) { return 3 * rp.n; }

/// Coupling sum runs over j = i-p .. i+p modulo n; the j = i term is zero.
[[nodiscard]] Eigen::VectorXd rhs_ring(const Eigen::VectorXd& state, const RingParams& rp);

/// Block Jacobian: per-node two-neuron blocks with -d added to the (1,1)
/// entry, and d/(2p) in the (1,1) entry of each of the 2p neighbor blocks.
[[nodiscard]] Eigen::MatrixXd jacobian_ring(const Eigen::VectorXd& state, const RingParams& rp);

[[nodiscard]] fode::SystemDef make_ring_system(const RingParams& rp);

}  // namespace fmhnn::models
