#include "fmhnn/dynamics/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace fmhnn::dynamics {

namespace {

int resolve_threads(int requested, std::size_t jobs) {
  unsigned n = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

/// Runs job(i) for i in [0, jobs) on a pool, preserving index order of results.
template <typename Fn>
void parallel_for(std::size_t jobs, int n_threads, Fn&& job) {
  if (n_threads <= 1 || jobs <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) {
      job(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_threads));
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) {
        job(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

}  // namespace

BifurcationScan bifurcation_sweep(const fode::SystemDef& system, double alpha_lo, double alpha_hi,
                                  int n_points, const Eigen::VectorXd& x0, const SweepConfig& cfg) {
  if (!(alpha_lo > 0.0) || !(alpha_lo < alpha_hi) || alpha_hi > 1.0) {
    throw std::invalid_argument("bifurcation_sweep: need 0 < alpha_lo < alpha_hi <= 1");
  }
  if (n_points < 2) {
    throw std::invalid_argument("bifurcation_sweep: n_points must be >= 2");
  }
  BifurcationScan scan;
  scan.alpha_grid.resize(static_cast<std::size_t>(n_points));
  scan.samples.resize(static_cast<std::size_t>(n_points));
  scan.classes.resize(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    scan.alpha_grid[static_cast<std::size_t>(i)] =
        alpha_lo + (alpha_hi - alpha_lo) * static_cast<double>(i) / (n_points - 1);
  }

  const int threads = resolve_threads(cfg.n_threads, scan.alpha_grid.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_for(scan.alpha_grid.size(), threads, [&](std::size_t i) {
    try {
      const fode::FractionalOrder order(scan.alpha_grid[i]);
      const auto traj = fode::solve_abm(system, x0, order, cfg.solver);
      scan.classes[i] = classify_attractor(traj, cfg.observable_index, cfg.classifier);
      if (!traj.diverged()) {
        scan.samples[i] =
            post_transient_peaks(traj, cfg.observable_index, cfg.classifier.transient_fraction);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
  });
  if (failure) {
    std::rethrow_exception(failure);
  }
  return scan;
}

std::vector<ProbeResult> multistability_probe(const fode::SystemDef& system, double alpha,
                                              const std::vector<Eigen::VectorXd>& x0s,
                                              const SweepConfig& cfg) {
  if (x0s.empty()) {
    throw std::invalid_argument("multistability_probe: empty initial-condition list");
  }
  std::vector<ProbeResult> results(x0s.size());
  const fode::FractionalOrder order(alpha);
  const int threads = resolve_threads(cfg.n_threads, x0s.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  parallel_for(x0s.size(), threads, [&](std::size_t i) {
    try {
      ProbeResult r;
      r.x0 = x0s[i];
      const auto traj = fode::solve_abm(system, x0s[i], order, cfg.solver);
      r.cls = classify_attractor(traj, cfg.observable_index, cfg.classifier);
      r.terminal_state = traj.states.row(traj.size() - 1);
      if (!traj.diverged()) {
        const auto peaks =
            post_transient_peaks(traj, cfg.observable_index, cfg.classifier.transient_fraction);
        if (!peaks.empty()) {
          r.peak_low = *std::min_element(peaks.begin(), peaks.end());
          r.peak_high = *std::max_element(peaks.begin(), peaks.end());
        }
      }
      results[i] = std::move(r);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) {
        failure = std::current_exception();
      }
    }
  });
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

}  // namespace fmhnn::dynamics
