#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "iwave/spectral.hpp"

namespace iwave {

/// Dynamic state of the interface: elevation eta [m] and the conjugate
/// momentum density xi = rho1*xi1 - rho2*xi2 [kg m^-1 s^-1] on a common grid.
/// eta has zero mean over the period, and neither field carries Nyquist
/// content (the grid's top mode has no representable phase, so spectral
/// translation would not be well defined on it).
class WaveState {
 public:
  WaveState(RealField eta, RealField xi) : eta_(std::move(eta)), xi_(std::move(xi)) {
    detail::require_same_grid(eta_, xi_, "WaveState");
    const double scale = 1.0 + max_abs(eta_) + max_abs(xi_);
    if (std::abs(mean(eta_)) > 1e-10 * scale)
      throw std::invalid_argument("WaveState: eta must have zero mean over the period");
    if (std::abs(detail::nyquist_coefficient(eta_)) > 1e-10 * scale ||
        std::abs(detail::nyquist_coefficient(xi_)) > 1e-10 * scale)
      throw std::invalid_argument("WaveState: fields must not carry the grid Nyquist mode");
  }

  const PeriodicGrid& grid() const { return eta_.grid(); }
  const RealField& eta() const { return eta_; }
  const RealField& xi() const { return xi_; }

 private:
  RealField eta_;
  RealField xi_;
};

inline WaveState zero_state(const PeriodicGrid& grid) {
  return WaveState(RealField::zeros(grid), RealField::zeros(grid));
}

/// s + a * d, the state-space axpy used by finite-difference probes.
inline WaveState axpy(const WaveState& s, double a, const WaveState& d) {
  return WaveState(s.eta() + a * d.eta(), s.xi() + a * d.xi());
}

namespace detail {
/// Maps k to its integer mode index, rejecting off-lattice wavenumbers and
/// modes at or above Nyquist.
inline int lattice_mode(const PeriodicGrid& grid, double k) {
  const double ratio = k / grid.fundamental();
  const int m = static_cast<int>(std::lround(ratio));
  if (std::abs(ratio - m) > 1e-9)
    throw std::invalid_argument("wavenumber " + std::to_string(k) +
                                " does not lie on the grid's wavenumber lattice");
  if (m == 0 || std::abs(m) >= grid.n / 2)
    throw std::invalid_argument("mode " + std::to_string(m) +
                                " must satisfy 1 <= |mode| < n/2");
  return m;
}
}  // namespace detail

/// Single-mode state eta = eta_amp*cos(k x + phase), xi = xi_amp*sin(k x + phase).
/// k must lie on the grid's wavenumber lattice strictly below Nyquist.
inline WaveState monochromatic_state(const PeriodicGrid& grid, double k, double eta_amp,
                                     double xi_amp, double phase) {
  detail::lattice_mode(grid, k);
  auto eta = RealField::from_function(grid, [&](double x) { return eta_amp * std::cos(k * x + phase); });
  auto xi = RealField::from_function(grid, [&](double x) { return xi_amp * std::sin(k * x + phase); });
  return WaveState(detail::project_out_nyquist(eta), detail::project_out_nyquist(xi));
}

/// Localized packet eta = eta_amp * (periodized Gaussian - mean), xi = 0.
/// The image sum is truncated where tails fall below 1e-16, which the width
/// bound width <= length/18 guarantees after one image on each side; the
/// lower bound width >= 2*spacing keeps the packet resolved.
inline WaveState gaussian_state(const PeriodicGrid& grid, double center, double width,
                                double eta_amp) {
  if (!(width >= 2.0 * grid.spacing()))
    throw std::invalid_argument("gaussian_state: width must be >= 2 grid spacings");
  if (!(width <= grid.length / 18.0))
    throw std::invalid_argument("gaussian_state: width must be <= length/18 so the periodized tails vanish");
  const double L = grid.length;
  auto raw = RealField::from_function(grid, [&](double x) {
    double acc = 0.0;
    for (int p = -2; p <= 2; ++p) {
      const double d = x - center + p * L;
      acc += std::exp(-0.5 * d * d / (width * width));
    }
    return acc;
  });
  const double m = mean(raw);
  std::vector<double> s(grid.n);
  for (int j = 0; j < grid.n; ++j) s[j] = eta_amp * (raw[j] - m);
  auto eta = detail::project_out_nyquist(RealField(grid, std::move(s)));
  // projection leaves the mean untouched only up to round-off; re-center
  const double m2 = mean(eta);
  for (int j = 0; j < grid.n; ++j) eta[j] -= m2;
  return WaveState(eta, RealField::zeros(grid));
}

/// Reproducible random state with spectral content in modes 1..max_mode,
/// scaled so that max|eta| = eta_amp and max|xi| = xi_amp (a zero amplitude
/// leaves the field identically zero).
inline WaveState random_band_limited_state(const PeriodicGrid& grid, int max_mode,
                                           double eta_amp, double xi_amp, std::uint64_t seed) {
  if (max_mode < 1 || max_mode >= grid.n / 2)
    throw std::invalid_argument("random_band_limited_state: need 1 <= max_mode < n/2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> phs(0.0, 2.0 * std::numbers::pi);
  auto build = [&](double target) {
    std::vector<double> a(max_mode + 1), ph(max_mode + 1);
    for (int m = 1; m <= max_mode; ++m) {
      a[m] = amp(rng);
      ph[m] = phs(rng);
    }
    auto f = RealField::from_function(grid, [&](double x) {
      double acc = 0.0;
      for (int m = 1; m <= max_mode; ++m)
        acc += a[m] * std::cos(m * grid.fundamental() * x + ph[m]);
      return acc;
    });
    const double peak = max_abs(f);
    if (target == 0.0 || peak == 0.0) return RealField::zeros(grid);
    return f * (target / peak);
  };
  auto eta = build(eta_amp);
  const double m = mean(eta);
  for (int j = 0; j < grid.n; ++j) eta[j] -= m;
  return WaveState(eta, build(xi_amp));
}

}  // namespace iwave
