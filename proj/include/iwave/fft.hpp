#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "iwave/errors.hpp"

// Self-contained complex FFT: iterative radix-2 for power-of-two sizes,
// Bluestein's chirp-z algorithm for everything else. Transforms are pure
// functions of their input (no cached plans), so concurrent use needs no
// synchronization. Twiddles are evaluated by std::polar per butterfly; at the
// grid sizes this library targets that costs little and avoids recurrence
// drift.

namespace iwave::detail {

using cvec = std::vector<std::complex<double>>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

/// Unnormalized transform of power-of-two length; sign = -1 forward
/// (e^{-i 2 pi j m / n}), sign = +1 inverse kernel.
inline void fft_pow2(cvec& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t m = 0; m < len / 2; ++m) {
        const auto w = std::polar(1.0, ang * static_cast<double>(m));
        const auto u = a[i + m];
        const auto v = a[i + m + len / 2] * w;
        a[i + m] = u + v;
        a[i + m + len / 2] = u - v;
      }
    }
  }
}

/// Unnormalized transform of arbitrary length via Bluestein's identity
/// j*m = (j^2 + m^2 - (j-m)^2)/2. The quadratic phase is reduced modulo 2n
/// before the angle is formed, which keeps it exact for any j.
inline void fft_bluestein(cvec& a, int sign) {
  const std::size_t n = a.size();
  const std::size_t m = next_pow2(2 * n - 1);
  cvec chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t q = (j * j) % (2 * n);
    chirp[j] = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(q) /
                                   static_cast<double>(n));
  }
  cvec u(m, 0.0), v(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * chirp[j];
  v[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) v[j] = v[m - j] = std::conj(chirp[j]);
  fft_pow2(u, -1);
  fft_pow2(v, -1);
  for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
  fft_pow2(u, +1);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t j = 0; j < n; ++j) a[j] = u[j] * chirp[j] * scale;
}

/// Forward DFT, unnormalized: A[m] = sum_j a[j] e^{-2 pi i j m / n}.
inline void fft(cvec& a) {
  if (a.empty()) throw error("fft: empty input");
  if (is_pow2(a.size()))
    fft_pow2(a, -1);
  else
    fft_bluestein(a, -1);
}

/// Inverse DFT including the 1/n normalization.
inline void ifft(cvec& a) {
  if (a.empty()) throw error("ifft: empty input");
  if (is_pow2(a.size()))
    fft_pow2(a, +1);
  else
    fft_bluestein(a, +1);
  const double scale = 1.0 / static_cast<double>(a.size());
  for (auto& z : a) z *= scale;
}

}  // namespace iwave::detail
