#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kfd::fft {

using cd = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

inline void transform(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi /
                       static_cast<double>(len);
    const cd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace detail

/// Forward DFT, unnormalized: X_k = sum_j x_j e^{-2 pi i jk/n}.
inline void forward(std::vector<cd>& a) { detail::transform(a, false); }

/// Inverse DFT with 1/n normalization.
inline void inverse(std::vector<cd>& a) {
  detail::transform(a, true);
  const double s = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v *= s;
}

inline std::vector<cd> forward_real(const std::vector<double>& x) {
  std::vector<cd> a(x.begin(), x.end());
  forward(a);
  return a;
}

inline std::vector<double> inverse_to_real(std::vector<cd> a) {
  inverse(a);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i].real();
  return out;
}

}  // namespace kfd::fft
