#pragma once

#include <vector>

#include "fmhnn/dynamics/attractor.hpp"
#include "fmhnn/fode/solver.hpp"

namespace fmhnn::dynamics {

/// Per-alpha post-transient peak samples of one observable plus the attractor
/// class. Divergent runs keep their flag and an empty sample list.
struct BifurcationScan {
  std::vector<double> alpha_grid;
  std::vector<std::vector<double>> samples;
  std::vector<AttractorClass> classes;
};

struct SweepConfig {
  fode::SolverConfig solver;
  ClassifierConfig classifier;
  int observable_index = 2;  // phi
  int n_threads = 0;         // 0 = hardware concurrency
};

/// Integrates the system once per alpha on a uniform grid over
/// [alpha_lo, alpha_hi] and collects peaks + classification. Runs are
/// independent and executed on a small worker pool; results are assembled in
/// grid order.
[[nodiscard]] BifurcationScan bifurcation_sweep(const fode::SystemDef& system, double alpha_lo,
                                                double alpha_hi, int n_points,
                                                const Eigen::VectorXd& x0,
                                                const SweepConfig& cfg);

struct ProbeResult {
  Eigen::VectorXd x0;
  AttractorClass cls;
  Eigen::VectorXd terminal_state;
  double peak_low = 0.0;   // min/max of post-transient peak values
  double peak_high = 0.0;  // (both zero when no peaks)
};

/// Independent runs at a fixed alpha, one per initial condition.
[[nodiscard]] std::vector<ProbeResult> multistability_probe(const fode::SystemDef& system,
                                                            double alpha,
                                                            const std::vector<Eigen::VectorXd>& x0s,
                                                            const SweepConfig& cfg);

}  // namespace fmhnn::dynamics
