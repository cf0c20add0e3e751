#pragma once

#include <Eigen/Dense>

#include "fmhnn/fode/types.hpp"

namespace fmhnn::models {

/// Connection weights and memristor coupling weight of the two-neuron network.
struct FmhnnParams {
  double b1 = -0.1;
  double b2 = 2.8;
  double b3 = -3.0;
  double b4 = 4.0;
  double k = 0.15;
};

struct FmhnnState {
  double x1 = 0.0;
  double x2 = 0.0;
  double phi = 0.0;
};

/// dx1 = -x1 + b1 tanh(x1) + b2 tanh(x2) + k phi (x1 - x2)
/// dx2 = -x2 + b3 tanh(x1) + b4 tanh(x2) - k phi (x1 - x2)
/// dphi = x1 - x2
[[nodiscard]] Eigen::Vector3d rhs_two_neuron(const FmhnnState& s, const FmhnnParams& p);

/// Analytic Jacobian of rhs_two_neuron at a state; last row is (1, -1, 0),
/// third column carries the memristor terms +-k (x1 - x2).
[[nodiscard]] Eigen::Matrix3d jacobian_two_neuron(const FmhnnState& s, const FmhnnParams& p);

/// Packs the model as a solver system (state layout x1, x2, phi).
[[nodiscard]] fode::SystemDef make_two_neuron_system(const FmhnnParams& p);

}  // namespace fmhnn::models
