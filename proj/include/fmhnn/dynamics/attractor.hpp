#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fmhnn/fode/types.hpp"

namespace fmhnn::dynamics {

enum class AttractorKind { fixed_point, periodic, chaotic, divergent, undetermined };

struct AttractorClass {
  AttractorKind kind = AttractorKind::undetermined;
  int period = 0;  // peak-value cluster count, meaningful for periodic only
};

[[nodiscard]] std::string to_string(const AttractorClass& c);
[[nodiscard]] bool operator==(const AttractorClass& a, const AttractorClass& b);

struct ClassifierConfig {
  double transient_fraction = 0.5;
  double fixed_point_tol = 1e-3;   // post-transient range below this = fixed point
  double peak_cluster_tol = 1e-3;  // absolute gap separating peak-value clusters
  int max_period = 16;             // more clusters than this = chaotic
};

/// Strict local maxima values of a sampled signal (plateaus excluded).
[[nodiscard]] std::vector<double> find_peaks(const std::vector<double>& signal);

/// Single-linkage cluster count of a value set under an absolute gap tolerance.
[[nodiscard]] int cluster_count(std::vector<double> values, double tol);

/// Classification rules, in order: divergent when the trajectory was cut;
/// fixed point when the post-transient observable range is below tol or no
/// strict maxima exist; periodic(k) for k peak-value clusters up to
/// max_period; chaotic beyond that.
[[nodiscard]] AttractorClass classify_attractor(const fode::Trajectory& traj,
                                                int observable_index,
                                                const ClassifierConfig& cfg);

/// Post-transient strict-maxima values of one observable (empty when divergent).
[[nodiscard]] std::vector<double> post_transient_peaks(const fode::Trajectory& traj,
                                                       int observable_index,
                                                       double transient_fraction);

}  // namespace fmhnn::dynamics
