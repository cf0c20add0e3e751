#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "fmhnn/dynamics/attractor.hpp"
#include "fmhnn/fode/types.hpp"
#include "fmhnn/models/ring.hpp"

namespace fmhnn::cli {

/// Unreadable or malformed config text / unknown keys. Exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally valid config that violates an operation precondition. Exit 4.
struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output files could not be written. Exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModelKind { two_neuron, ring };

/// Flat key-value experiment description, sections per module concern.
/// See README for the grammar and full key list.
struct ExperimentConfig {
  ModelKind model = ModelKind::two_neuron;
  models::FmhnnParams params;
  int ring_n = 5;
  int ring_p = 1;
  double ring_d = 0.5;

  double alpha = 0.93;
  fode::SolverConfig solver;

  Eigen::VectorXd x0;  // empty unless given

  std::vector<double> delta_list;
  bool classify = true;

  std::vector<double> alpha_list;
  Eigen::VectorXd delta_vec;  // empty = zeros(n)

  double alpha_lo = 0.96;
  double alpha_hi = 1.0;
  int n_points = 21;
  int observable_index = 2;
  dynamics::ClassifierConfig classifier;

  int renorm_interval = 100;

  std::vector<Eigen::VectorXd> x0_list;

  std::string output_dir = ".";

  std::string raw_text;  // verbatim config, echoed into the manifest

  [[nodiscard]] models::RingParams ring_params() const {
    return {params, ring_n, ring_p, ring_d};
  }
};

[[nodiscard]] bool operator==(const ExperimentConfig& a, const ExperimentConfig& b);

/// Parses the INI-style grammar. Throws ConfigError on syntax problems,
/// unknown sections/keys, or unparsable numbers.
[[nodiscard]] ExperimentConfig parse_config_text(const std::string& text);

/// Reads and parses a config file. Throws ConfigError when unreadable.
[[nodiscard]] ExperimentConfig load_config(const std::string& path);

}  // namespace fmhnn::cli
