#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace fmhnn::fode {

/// Caputo differentiation order, restricted to (0, 1].
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) {
      throw std::invalid_argument("fractional order must lie in (0, 1], got " +
                                  std::to_string(alpha));
    }
  }
  [[nodiscard]] double value() const { return alpha_; }

 private:
  double alpha_;
};

enum class ConvolutionMode { direct, fft_accelerated };

struct SolverConfig {
  double step_size = 0.005;
  double t_end = 100.0;
  ConvolutionMode convolution = ConvolutionMode::direct;
  double divergence_threshold = 1e6;
  int corrector_iterations = 1;
};

/// Thrown when the right-hand side produces a non-finite value at a finite state.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, std::size_t step)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_index(step) {}
  std::size_t step_index;
};

using RhsFn = std::function<void(double t, const Eigen::VectorXd& x, Eigen::VectorXd& dx)>;
using JacobianFn = std::function<void(const Eigen::VectorXd& x, Eigen::MatrixXd& jac)>;

struct SystemDef {
  int dimension = 0;
  RhsFn rhs;
  std::optional<JacobianFn> jacobian;
  std::string name;
};

/// Solution on a uniform grid. `states` has one row per grid point. When the
/// infinity norm of the state exceeds the divergence threshold the run stops,
/// the offending state is kept as the last row and its index is recorded.
struct Trajectory {
  Eigen::VectorXd times;
  Eigen::MatrixXd states;
  std::optional<Eigen::Index> diverged_at;
  double step_size = 0.0;

  [[nodiscard]] Eigen::Index size() const { return times.size(); }
  [[nodiscard]] bool diverged() const { return diverged_at.has_value(); }
};

/// Number of steps for the uniform grid, or an invalid_argument if the config
/// does not describe one (non-positive sizes, non-integral t_end/h, overflow).
[[nodiscard]] std::size_t grid_steps(const SolverConfig& cfg);

}  // namespace fmhnn::fode
