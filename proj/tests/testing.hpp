#pragma once

// Shared helpers for the test suites: reproducible random fields and the
// brute-force DFT used as the independent transform oracle.

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "iwave/field.hpp"
#include "iwave/media.hpp"

namespace testing_support {

inline iwave::RealField random_field(const iwave::PeriodicGrid& grid, std::uint64_t seed,
                                     double amplitude = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-amplitude, amplitude);
  std::vector<double> s(grid.n);
  for (auto& v : s) v = dist(rng);
  return iwave::RealField(grid, std::move(s));
}

inline iwave::RealField random_zero_mean_field(const iwave::PeriodicGrid& grid,
                                               std::uint64_t seed, double amplitude = 1.0) {
  auto f = random_field(grid, seed, amplitude);
  const double m = iwave::mean(f);
  for (int j = 0; j < grid.n; ++j) f[j] -= m;
  return f;
}

/// Band-limited random field with modes 1..max_mode, max|f| scaled to amplitude.
inline iwave::RealField random_smooth_field(const iwave::PeriodicGrid& grid,
                                            std::uint64_t seed, int max_mode,
                                            double amplitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phs(0.0, 2.0 * std::numbers::pi);
  std::vector<double> a(max_mode + 1), ph(max_mode + 1);
  for (int m = 1; m <= max_mode; ++m) {
    a[m] = amp(rng);
    ph[m] = phs(rng);
  }
  auto f = iwave::RealField::from_function(grid, [&](double x) {
    double acc = 0.0;
    for (int m = 1; m <= max_mode; ++m)
      acc += a[m] * std::cos(m * grid.fundamental() * x + ph[m]);
    return acc;
  });
  const double peak = iwave::max_abs(f);
  return f * (peak > 0.0 ? amplitude / peak : 0.0);
}

/// O(n^2) discrete Fourier transform, the independent oracle for the FFT.
inline std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  std::vector<std::complex<double>> out(n, 0.0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j)
      out[m] += a[j] * std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                           static_cast<double>(j * m % n) /
                                           static_cast<double>(n));
  return out;
}

/// Two-layer parameters of unit scale used across the DNO tests.
inline iwave::MediaParams unit_media() {
  iwave::MediaParams p;
  p.rho1 = 2.0;
  p.rho2 = 1.0;
  p.h1 = 1.0;
  p.h2 = 1.0;
  p.l1 = 0.5;
  p.l2 = 0.5;
  p.kappa = 0.0;
  p.gravity = 9.8;
  return p;
}

/// Oceanic parameters from the worked dispersion examples.
inline iwave::MediaParams ocean_media() {
  return iwave::MediaParams{};  // rho 1000/990, h 100/50, l 5/5, g 9.8
}

}  // namespace testing_support
