#include "fmhnn/stability/ring_spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace fmhnn::stability {

namespace {

std::vector<std::complex<double>> dense_eigs(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

Eigen::Matrix3d skeleton_a0(double d) {
  Eigen::Matrix3d a0;
  a0 << -1.0 - d, 0, 0, 0, -1, 0, 1, -1, 0;
  return a0;
}

}  // namespace

RingSpectrum ring_spectrum(const models::RingParams& rp, const Eigen::VectorXd& delta_vec) {
  rp.validate();
  if (delta_vec.size() != rp.n) {
    throw std::invalid_argument("ring_spectrum: delta_vec length must equal n");
  }
  const int n = rp.n;
  RingSpectrum out;
  out.stability_bound_n = ring_stability_bound(rp.p, rp.d);

  // circulant route: real 3x3 blocks (the neighbor sum is cosine-symmetric)
  out.block_eigenvalues.reserve(3 * static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    double sigma = 0.0;
    for (int j = 1; j <= rp.p; ++j) {
      sigma += 2.0 * std::cos(2.0 * std::numbers::pi * j * m / n);
    }
    const double cm = -rp.d + rp.d / (2.0 * rp.p) * sigma;
    Eigen::Matrix3d block =
        models::jacobian_two_neuron({0.0, 0.0, delta_vec[m]}, rp.base);
    block(0, 0) += cm;
    Eigen::EigenSolver<Eigen::Matrix3d> es(block, false);
    for (int i = 0; i < 3; ++i) {
      out.block_eigenvalues.push_back(es.eigenvalues()[i]);
    }
  }

  Eigen::VectorXd state = Eigen::VectorXd::Zero(3 * n);
  for (int i = 0; i < n; ++i) {
    state[3 * i + 2] = delta_vec[i];
  }
  out.dense_eigenvalues = dense_eigs(models::jacobian_ring(state, rp));
  out.coupling_eigenvalues = coupling_skeleton_spectrum_dense(n, rp.p, rp.d);
  return out;
}

std::optional<double> ring_stability_bound(int p, double d) {
  if (p < 1 || d < 0.0) {
    throw std::invalid_argument("ring_stability_bound: requires p >= 1 and d >= 0");
  }
  if (d == 0.0) {
    return std::nullopt;
  }
  return (2.0 * p * (d + 1.0) + d) / d;
}

std::vector<std::complex<double>> coupling_skeleton_spectrum_dense(int n, int p, double d) {
  if (n < 2 || p < 1) {
    throw std::invalid_argument("coupling skeleton: n >= 2 and p >= 1 required");
  }
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  const Eigen::Matrix3d a0 = skeleton_a0(d);
  const double a1 = d / (2.0 * p);
  for (int i = 0; i < n; ++i) {
    b.block<3, 3>(3 * i, 3 * i) = a0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        b(3 * i, 3 * j) = a1;
      }
    }
  }
  return dense_eigs(b);
}

std::vector<std::complex<double>> coupling_skeleton_spectrum_blocks(int n, int p, double d) {
  if (n < 2 || p < 1) {
    throw std::invalid_argument("coupling skeleton: n >= 2 and p >= 1 required");
  }
  const Eigen::Matrix3d a0 = skeleton_a0(d);
  Eigen::Matrix3d a1 = Eigen::Matrix3d::Zero();
  a1(0, 0) = d / (2.0 * p);

  std::vector<std::complex<double>> out;
  out.reserve(3 * static_cast<std::size_t>(n));
  Eigen::EigenSolver<Eigen::Matrix3d> sync(Eigen::Matrix3d(a0 + (n - 1) * a1), false);
  for (int i = 0; i < 3; ++i) {
    out.push_back(sync.eigenvalues()[i]);
  }
  Eigen::EigenSolver<Eigen::Matrix3d> rest(Eigen::Matrix3d(a0 - a1), false);
  for (int m = 1; m < n; ++m) {
    for (int i = 0; i < 3; ++i) {
      out.push_back(rest.eigenvalues()[i]);
    }
  }
  return out;
}

bool matignon_precondition_all_alpha(const std::vector<std::complex<double>>& eigs,
                                     int expected_zeros, double tol) {
  int zeros = 0;
  for (const auto& e : eigs) {
    if (std::abs(e) <= tol) {
      ++zeros;
    } else if (std::abs(std::arg(e)) < std::numbers::pi / 2.0 - tol) {
      return false;  // strictly inside some fractional sector with alpha < 1
    }
  }
  return zeros == expected_zeros;
}

}  // namespace fmhnn::stability
