#include "fmhnn/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fmhnn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: cannot parse number for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_real(key, value);
  const double r = std::round(v);
  if (std::abs(v - r) > 0.0) {
    throw ConfigError("config: expected an integer for '" + key + "': " + value);
  }
  return static_cast<int>(r);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config: expected a boolean for '" + key + "': " + value);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(value);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      out.push_back(parse_real(key, item));
    }
  }
  return out;
}

Eigen::VectorXd parse_vector(const std::string& key, const std::string& value) {
  const auto list = parse_list(key, value);
  Eigen::VectorXd v(static_cast<Eigen::Index>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = list[i];
  }
  return v;
}

// entries separated by ';', each a comma list, parentheses optional
std::vector<Eigen::VectorXd> parse_vector_list(const std::string& key, const std::string& value) {
  std::vector<Eigen::VectorXd> out;
  std::string entry;
  std::stringstream ss(value);
  while (std::getline(ss, entry, ';')) {
    std::string clean;
    for (char c : entry) {
      if (c != '(' && c != ')') {
        clean += c;
      }
    }
    clean = trim(clean);
    if (!clean.empty()) {
      out.push_back(parse_vector(key, clean));
    }
  }
  return out;
}

}  // namespace

bool operator==(const ExperimentConfig& a, const ExperimentConfig& b) {
  const auto veq = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    return x.size() == y.size() && x == y;
  };
  if (a.x0_list.size() != b.x0_list.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.x0_list.size(); ++i) {
    if (!veq(a.x0_list[i], b.x0_list[i])) {
      return false;
    }
  }
  return a.model == b.model && a.params.b1 == b.params.b1 && a.params.b2 == b.params.b2 &&
         a.params.b3 == b.params.b3 && a.params.b4 == b.params.b4 && a.params.k == b.params.k &&
         a.ring_n == b.ring_n && a.ring_p == b.ring_p && a.ring_d == b.ring_d &&
         a.alpha == b.alpha && a.solver.step_size == b.solver.step_size &&
         a.solver.t_end == b.solver.t_end && a.solver.convolution == b.solver.convolution &&
         a.solver.divergence_threshold == b.solver.divergence_threshold &&
         a.solver.corrector_iterations == b.solver.corrector_iterations && veq(a.x0, b.x0) &&
         a.delta_list == b.delta_list && a.classify == b.classify &&
         a.alpha_list == b.alpha_list && veq(a.delta_vec, b.delta_vec) &&
         a.alpha_lo == b.alpha_lo && a.alpha_hi == b.alpha_hi && a.n_points == b.n_points &&
         a.observable_index == b.observable_index &&
         a.classifier.transient_fraction == b.classifier.transient_fraction &&
         a.classifier.fixed_point_tol == b.classifier.fixed_point_tol &&
         a.classifier.peak_cluster_tol == b.classifier.peak_cluster_tol &&
         a.classifier.max_period == b.classifier.max_period &&
         a.renorm_interval == b.renorm_interval && a.output_dir == b.output_dir;
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  cfg.raw_text = text;

  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) {
      line = line.substr(0, comment);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) + ": unterminated section");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string qual = section + "." + key;

    if (qual == "model.type") {
      if (value == "two_neuron") {
        cfg.model = ModelKind::two_neuron;
      } else if (value == "ring") {
        cfg.model = ModelKind::ring;
      } else {
        throw ConfigError("config: unknown model type '" + value + "'");
      }
    } else if (qual == "model.b1") {
      cfg.params.b1 = parse_real(qual, value);
    } else if (qual == "model.b2") {
      cfg.params.b2 = parse_real(qual, value);
    } else if (qual == "model.b3") {
      cfg.params.b3 = parse_real(qual, value);
    } else if (qual == "model.b4") {
      cfg.params.b4 = parse_real(qual, value);
    } else if (qual == "model.k") {
      cfg.params.k = parse_real(qual, value);
    } else if (qual == "model.n") {
      cfg.ring_n = parse_int(qual, value);
    } else if (qual == "model.p") {
      cfg.ring_p = parse_int(qual, value);
    } else if (qual == "model.d") {
      cfg.ring_d = parse_real(qual, value);
    } else if (qual == "solver.alpha") {
      cfg.alpha = parse_real(qual, value);
    } else if (qual == "solver.h") {
      cfg.solver.step_size = parse_real(qual, value);
    } else if (qual == "solver.t_end") {
      cfg.solver.t_end = parse_real(qual, value);
    } else if (qual == "solver.convolution") {
      if (value == "direct") {
        cfg.solver.convolution = fode::ConvolutionMode::direct;
      } else if (value == "fft") {
        cfg.solver.convolution = fode::ConvolutionMode::fft_accelerated;
      } else {
        throw ConfigError("config: convolution must be 'direct' or 'fft'");
      }
    } else if (qual == "solver.divergence_threshold") {
      cfg.solver.divergence_threshold = parse_real(qual, value);
    } else if (qual == "solver.corrector_iterations") {
      cfg.solver.corrector_iterations = parse_int(qual, value);
    } else if (qual == "simulate.x0" || qual == "bifurcate.x0" || qual == "lyapunov.x0") {
      cfg.x0 = parse_vector(qual, value);
    } else if (qual == "stability.delta_list") {
      cfg.delta_list = parse_list(qual, value);
    } else if (qual == "stability.classify") {
      cfg.classify = parse_bool(qual, value);
    } else if (qual == "ring.alpha_list") {
      cfg.alpha_list = parse_list(qual, value);
    } else if (qual == "ring.delta_vec") {
      cfg.delta_vec = parse_vector(qual, value);
    } else if (qual == "bifurcate.alpha_lo") {
      cfg.alpha_lo = parse_real(qual, value);
    } else if (qual == "bifurcate.alpha_hi") {
      cfg.alpha_hi = parse_real(qual, value);
    } else if (qual == "bifurcate.n_points") {
      cfg.n_points = parse_int(qual, value);
    } else if (qual == "bifurcate.observable" || qual == "multistability.observable") {
      if (value == "x1") {
        cfg.observable_index = 0;
      } else if (value == "x2") {
        cfg.observable_index = 1;
      } else if (value == "phi") {
        cfg.observable_index = 2;
      } else {
        cfg.observable_index = parse_int(qual, value);
      }
    } else if (qual == "bifurcate.transient_fraction") {
      cfg.classifier.transient_fraction = parse_real(qual, value);
    } else if (qual == "bifurcate.fixed_point_tol") {
      cfg.classifier.fixed_point_tol = parse_real(qual, value);
    } else if (qual == "bifurcate.peak_cluster_tol") {
      cfg.classifier.peak_cluster_tol = parse_real(qual, value);
    } else if (qual == "bifurcate.max_period") {
      cfg.classifier.max_period = parse_int(qual, value);
    } else if (qual == "lyapunov.renorm_interval") {
      cfg.renorm_interval = parse_int(qual, value);
    } else if (qual == "multistability.x0_list") {
      cfg.x0_list = parse_vector_list(qual, value);
    } else if (qual == "output.dir") {
      cfg.output_dir = value;
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + qual + "'");
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace fmhnn::cli
