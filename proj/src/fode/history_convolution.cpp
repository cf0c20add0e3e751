#include "fmhnn/fode/history_convolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>

namespace fmhnn::fode {
namespace detail {

void fft_pow2(std::complex<double>* data, std::size_t n, bool inverse) {
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) {
      j ^= bit;
    }
    j ^= bit;
    if (i < j) {
      std::swap(data[i], data[j]);
    }
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = data[i + j];
        const auto v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      data[i] *= s;
    }
  }
}

}  // namespace detail

HistoryConvolution::HistoryConvolution(std::vector<double> kernel0, std::vector<double> kernel1,
                                       int dim, std::size_t n_max, ConvolutionMode mode)
    : dim_(dim), n_max_(n_max), mode_(mode) {
  ker_[0] = std::move(kernel0);
  ker_[1] = std::move(kernel1);
  hist_.reserve((n_max + 1) * static_cast<std::size_t>(dim));
  if (mode_ == ConvolutionMode::fft_accelerated) {
    const std::size_t d = static_cast<std::size_t>(dim_);
    for (auto& a : acc_) {
      a.assign(d * 2 * kPanel, 0.0);
    }
    scratch_a_.resize(d * 2 * kPanel);
    scratch_b_.resize(d * 2 * kPanel);
  }
}

void HistoryConvolution::push(const double* f) {
  hist_.insert(hist_.end(), f, f + dim_);
  ++count_;
  if (mode_ == ConvolutionMode::fft_accelerated) {
    const std::size_t n = count_ - 1;
    if (n > 0 && n % kPanel == 0) {
      on_block_boundary();
    }
  }
}

void HistoryConvolution::on_block_boundary() {
  const std::size_t B = kPanel;
  const std::size_t L = 2 * B;
  const std::size_t d = static_cast<std::size_t>(dim_);
  const std::size_t r = (count_ - 1) / B;

  // finalize input block r-1
  {
    const std::size_t q = r - 1;
    cvec spec(d * L);
    for (std::size_t c = 0; c < d; ++c) {
      std::complex<double>* s = spec.data() + c * L;
      for (std::size_t i = 0; i < B; ++i) {
        s[i] = hist_[(q * B + i) * d + c];
      }
      std::fill(s + B, s + L, std::complex<double>(0.0, 0.0));
      detail::fft_pow2(s, L, false);
    }
    input_spectra_.push_back(std::move(spec));
  }

  // kernel panels up to s = r
  for (int k = 0; k < 2; ++k) {
    while (kernel_spectra_[k].size() < r) {
      const std::size_t s = kernel_spectra_[k].size() + 1;
      cvec spec(L, std::complex<double>(0.0, 0.0));
      const std::size_t lo = s * B;
      const std::size_t hi = std::min(lo + B, ker_[k].size());
      for (std::size_t u = lo; u < hi; ++u) {
        spec[u - lo] = ker_[k][u];
      }
      detail::fft_pow2(spec.data(), L, false);
      kernel_spectra_[k].push_back(std::move(spec));
    }
  }

  // slide accumulators to the new block and fold in pair group u = r
  for (int k = 0; k < 2; ++k) {
    auto& acc = acc_[k];
    cvec& z = (k == 0) ? scratch_a_ : scratch_b_;
    std::fill(z.begin(), z.end(), std::complex<double>(0.0, 0.0));
    for (std::size_t q = 0; q < r; ++q) {
      const cvec& ks = kernel_spectra_[k][r - q - 1];  // panel s = r - q
      const cvec& fs = input_spectra_[q];
      for (std::size_t c = 0; c < d; ++c) {
        std::complex<double>* zz = z.data() + c * L;
        const std::complex<double>* ff = fs.data() + c * L;
        for (std::size_t i = 0; i < L; ++i) {
          zz[i] += ks[i] * ff[i];
        }
      }
    }
    for (std::size_t c = 0; c < d; ++c) {
      detail::fft_pow2(z.data() + c * L, L, true);
      double* a = acc.data() + c * L;
      std::memmove(a, a + B, B * sizeof(double));
      std::fill(a + B, a + L, 0.0);
      const std::complex<double>* zz = z.data() + c * L;
      for (std::size_t i = 0; i < L; ++i) {
        a[i] += zz[i].real();
      }
    }
  }
  acc_block_ = r;
}

void HistoryConvolution::eval(double* out0, double* out1) {
  const std::size_t n = count_ - 1;
  const std::size_t d = static_cast<std::size_t>(dim_);
  std::fill(out0, out0 + d, 0.0);
  std::fill(out1, out1 + d, 0.0);

  const std::size_t head = (mode_ == ConvolutionMode::direct)
                               ? n
                               : std::min(n, kPanel - 1);
  const double* k0 = ker_[0].data();
  const double* k1 = ker_[1].data();
  for (std::size_t j = n - head; j <= n; ++j) {
    const double w0 = k0[n - j];
    const double w1 = k1[n - j];
    const double* f = hist_.data() + j * d;
    for (std::size_t c = 0; c < d; ++c) {
      out0[c] += w0 * f[c];
      out1[c] += w1 * f[c];
    }
  }
  if (mode_ == ConvolutionMode::fft_accelerated && n >= kPanel) {
    const std::size_t off = n - acc_block_ * kPanel;
    for (std::size_t c = 0; c < d; ++c) {
      out0[c] += acc_[0][c * 2 * kPanel + off];
      out1[c] += acc_[1][c * 2 * kPanel + off];
    }
  }
}

}  // namespace fmhnn::fode
