#include "fmhnn/dynamics/attractor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fmhnn::dynamics {

std::string to_string(const AttractorClass& c) {
  switch (c.kind) {
    case AttractorKind::fixed_point: return "fixed_point";
    case AttractorKind::periodic: return "periodic(" + std::to_string(c.period) + ")";
    case AttractorKind::chaotic: return "chaotic";
    case AttractorKind::divergent: return "divergent";
    case AttractorKind::undetermined: return "undetermined";
  }
  return "?";
}

bool operator==(const AttractorClass& a, const AttractorClass& b) {
  return a.kind == b.kind && (a.kind != AttractorKind::periodic || a.period == b.period);
}

std::vector<double> find_peaks(const std::vector<double>& signal) {
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < signal.size(); ++i) {
    if (signal[i - 1] < signal[i] && signal[i] > signal[i + 1]) {
      peaks.push_back(signal[i]);
    }
  }
  return peaks;
}

int cluster_count(std::vector<double> values, double tol) {
  if (values.empty()) {
    return 0;
  }
  std::sort(values.begin(), values.end());
  int groups = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tol) {
      ++groups;
    }
  }
  return groups;
}

std::vector<double> post_transient_peaks(const fode::Trajectory& traj, int observable_index,
                                         double transient_fraction) {
  if (traj.size() == 0) {
    throw std::invalid_argument("empty trajectory");
  }
  const auto start = static_cast<Eigen::Index>(
      std::floor(transient_fraction * static_cast<double>(traj.size())));
  std::vector<double> window;
  window.reserve(static_cast<std::size_t>(traj.size() - start));
  for (Eigen::Index j = start; j < traj.size(); ++j) {
    window.push_back(traj.states(j, observable_index));
  }
  return find_peaks(window);
}

AttractorClass classify_attractor(const fode::Trajectory& traj, int observable_index,
                                  const ClassifierConfig& cfg) {
  if (traj.size() == 0) {
    throw std::invalid_argument("classify_attractor: empty trajectory");
  }
  if (observable_index < 0 || observable_index >= traj.states.cols()) {
    throw std::invalid_argument("classify_attractor: observable index out of range");
  }
  if (traj.diverged()) {
    return {AttractorKind::divergent, 0};
  }
  const auto start = static_cast<Eigen::Index>(
      std::floor(cfg.transient_fraction * static_cast<double>(traj.size())));
  double lo = traj.states(start, observable_index);
  double hi = lo;
  std::vector<double> window;
  window.reserve(static_cast<std::size_t>(traj.size() - start));
  for (Eigen::Index j = start; j < traj.size(); ++j) {
    const double v = traj.states(j, observable_index);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    window.push_back(v);
  }
  if (hi - lo < cfg.fixed_point_tol) {
    return {AttractorKind::fixed_point, 0};
  }
  const auto peaks = find_peaks(window);
  if (peaks.empty()) {
    // monotone tail settling toward an equilibrium
    return {AttractorKind::fixed_point, 0};
  }
  const int k = cluster_count(peaks, cfg.peak_cluster_tol);
  if (k > cfg.max_period) {
    return {AttractorKind::chaotic, 0};
  }
  return {AttractorKind::periodic, k};
}

}  // namespace fmhnn::dynamics
