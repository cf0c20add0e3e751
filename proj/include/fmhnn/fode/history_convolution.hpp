#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fmhnn/fode/types.hpp"

namespace fmhnn::fode {

/// Online causal convolution of a growing vector-valued sequence f_0, f_1, ...
/// against two fixed scalar kernels (the predictor and corrector quadrature
/// kernels share the f history, so one engine serves both):
///
///   S_k[n] = sum_{u=0}^{n} kernel_k[u] * f[n-u],   k in {0, 1}
///
/// direct mode evaluates the sums literally (O(n) per step) and is the
/// correctness reference. fft_accelerated splits each kernel into fixed-size
/// panels: lags u < B are applied directly every step, and panels u >= B are
/// folded in through blocked FFT products once per output block, O(B + n/B)
/// amortized work per step. Both modes are deterministic.
class HistoryConvolution {
 public:
  /// Kernels must cover lags 0..n_max. dim is the number of f components.
  HistoryConvolution(std::vector<double> kernel0, std::vector<double> kernel1, int dim,
                     std::size_t n_max, ConvolutionMode mode);

  /// Append f_n (dim values).
  void push(const double* f);

  /// Evaluate both sums at n = count()-1. out0/out1 hold dim values each.
  void eval(double* out0, double* out1);

  [[nodiscard]] std::size_t count() const { return count_; }

  /// Stored history value f[j], component d.
  [[nodiscard]] double history(std::size_t j, int d) const {
    return hist_[j * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(d)];
  }

  static constexpr std::size_t kPanel = 1024;

 private:
  void on_block_boundary();

  std::vector<double> ker_[2];
  int dim_;
  std::size_t n_max_;
  ConvolutionMode mode_;
  std::size_t count_ = 0;

  std::vector<double> hist_;  // row-major, count_ x dim

  // fft mode state
  using cvec = std::vector<std::complex<double>>;
  std::vector<cvec> input_spectra_;        // per completed input block, dim interleaved
  std::vector<cvec> kernel_spectra_[2];    // per kernel panel s >= 1 (index s-1)
  std::vector<double> acc_[2];             // dim x 2B accumulators, aligned at block start
  std::size_t acc_block_ = 0;
  cvec scratch_a_, scratch_b_;
};

namespace detail {
/// In-place radix-2 FFT, size must be a power of two. inverse applies 1/n.
void fft_pow2(std::complex<double>* data, std::size_t n, bool inverse);
}  // namespace detail

}  // namespace fmhnn::fode
