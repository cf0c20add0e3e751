#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "fmhnn/models/ring.hpp"
#include "fmhnn/stability/char_poly.hpp"

namespace fmhnn::stability {

/// Spectral views of the ring linearization at the equilibrium family
/// (x1 = x2 = 0, phi_i = delta_i).
///
/// block_eigenvalues: circulant route — union over Fourier modes m of the
///   3x3 block J_2N(delta_m) with the coupling eigenvalue
///   c_m = -d + (d/2p) sum_{j=1..p} 2 cos(2 pi j m / n) added to entry (1,1).
///   Exact against the dense route when delta is homogeneous (and when d = 0).
/// dense_eigenvalues: eigensolve of the assembled 3n x 3n jacobian_ring.
/// coupling_eigenvalues: the spectrum of the block-circulant coupling
///   skeleton used by the size-bound analysis (see coupling_skeleton_*).
/// stability_bound_n: (2p(d+1)+d)/d, or empty when d = 0 (no constraint).
struct RingSpectrum {
  std::vector<std::complex<double>> block_eigenvalues;
  std::vector<std::complex<double>> dense_eigenvalues;
  std::vector<std::complex<double>> coupling_eigenvalues;
  std::optional<double> stability_bound_n;
};

[[nodiscard]] RingSpectrum ring_spectrum(const models::RingParams& rp,
                                         const Eigen::VectorXd& delta_vec);

/// n < (2p(d+1)+d)/d is the stability bound on the sub-network count;
/// d = 0 has no constraint (empty).
[[nodiscard]] std::optional<double> ring_stability_bound(int p, double d);

/// Coupling skeleton of the size-bound analysis: the 3n x 3n block-circulant
/// matrix with diagonal block A0 = [[-1-d,0,0],[0,-1,0],[1,-1,0]] and
/// (d/2p) e11 in every off-diagonal block slot. Dense eigensolver route.
[[nodiscard]] std::vector<std::complex<double>> coupling_skeleton_spectrum_dense(int n, int p,
                                                                                 double d);

/// Same spectrum through the circulant identity
/// lambda(bcirc(A,C,..,C)) = lambda(A+(n-1)C) u lambda(A-C) x (n-1).
[[nodiscard]] std::vector<std::complex<double>> coupling_skeleton_spectrum_blocks(int n, int p,
                                                                                  double d);

/// All-alpha Matignon precondition on a spectrum that structurally carries
/// expected_zeros zero eigenvalues: passes iff exactly that many eigenvalues
/// vanish and every other eigenvalue has |arg| >= pi/2 (Re <= 0).
[[nodiscard]] bool matignon_precondition_all_alpha(const std::vector<std::complex<double>>& eigs,
                                                   int expected_zeros, double tol = 1e-9);

}  // namespace fmhnn::stability
