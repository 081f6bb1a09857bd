#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "iwave/fft.hpp"
#include "iwave/field.hpp"

namespace iwave {

/// Fourier-series coefficients c_m of a real field, f(x) = sum_m c_m e^{i k_m x}.
/// Storage index m in [0, n) maps to the signed mode through
/// PeriodicGrid::signed_mode; coefficients of a real field satisfy
/// c_{-m} = conj(c_m).
using Spectrum = std::vector<std::complex<double>>;

inline Spectrum to_spectrum(const RealField& f) {
  detail::cvec a(f.size());
  for (int j = 0; j < f.size(); ++j) a[j] = f[j];
  detail::fft(a);
  const double scale = 1.0 / f.size();
  for (auto& z : a) z *= scale;
  return a;
}

inline RealField from_spectrum(const PeriodicGrid& grid, Spectrum c) {
  if (static_cast<int>(c.size()) != grid.n)
    throw std::invalid_argument("from_spectrum: size mismatch");
  for (auto& z : c) z *= static_cast<double>(grid.n);
  detail::ifft(c);
  std::vector<double> s(grid.n);
  for (int j = 0; j < grid.n; ++j) s[j] = c[j].real();
  return RealField(grid, std::move(s));
}

enum class Parity { even_real, odd_imaginary };

/// Operator acting diagonally in the spectral representation through a real
/// scalar symbol s(k). An even_real multiplier applies s(|k|); an
/// odd_imaginary multiplier applies i*sign(k)*s(|k|). Both extensions keep
/// real fields real by construction. The value at k = 0 is supplied
/// explicitly so removable singularities are resolved up front (odd symbols
/// are pinned to zero there). Odd multipliers zero the grid Nyquist mode,
/// which carries no representable sign of k.
class FourierMultiplier {
 public:
  static FourierMultiplier even(std::function<double(double)> symbol, double value_at_zero) {
    return FourierMultiplier(Parity::even_real, std::move(symbol), value_at_zero);
  }

  static FourierMultiplier odd(std::function<double(double)> symbol) {
    return FourierMultiplier(Parity::odd_imaginary, std::move(symbol), 0.0);
  }

  static FourierMultiplier identity() {
    return even([](double) { return 1.0; }, 1.0);
  }

  Parity parity() const { return parity_; }

  /// Even/odd extension of the symbol, with the explicit k = 0 value.
  double symbol(double k) const {
    if (k == 0.0) return value_at_zero_;
    const double mag = symbol_(std::abs(k));
    if (parity_ == Parity::even_real) return mag;
    return k > 0.0 ? mag : -mag;
  }

 private:
  FourierMultiplier(Parity p, std::function<double(double)> s, double v0)
      : parity_(p), symbol_(std::move(s)), value_at_zero_(v0) {}

  Parity parity_;
  std::function<double(double)> symbol_;
  double value_at_zero_;
};

/// Applies a Fourier multiplier to a real field. Rejects symbols that are not
/// finite at some grid wavenumber, naming the offending wavenumber.
inline RealField apply_multiplier(const FourierMultiplier& m, const RealField& f) {
  const auto& grid = f.grid();
  Spectrum c = to_spectrum(f);
  for (int idx = 0; idx < grid.n; ++idx) {
    if (m.parity() == Parity::odd_imaginary && idx == grid.nyquist_index()) {
      c[idx] = 0.0;
      continue;
    }
    const double k = grid.wavenumber(idx);
    const double s = m.symbol(k);
    if (!std::isfinite(s))
      throw std::invalid_argument("apply_multiplier: symbol not finite at wavenumber k = " +
                                  std::to_string(k));
    if (m.parity() == Parity::even_real)
      c[idx] *= s;
    else
      c[idx] *= std::complex<double>(0.0, s);
  }
  return from_spectrum(grid, std::move(c));
}

/// Spectral derivative d/dx; the mean of the result is exactly zero.
inline RealField derivative(const RealField& f) {
  static const FourierMultiplier d = FourierMultiplier::odd([](double k) { return k; });
  return apply_multiplier(d, f);
}

/// Largest retained |mode| under the 2/3 rule.
inline int dealias_cutoff(int n) { return n / 3; }

/// Zeroes all spectral coefficients with |mode| above the 2/3-rule cutoff.
/// Idempotent.
inline RealField dealias(const RealField& f) {
  const auto& grid = f.grid();
  const int cut = dealias_cutoff(grid.n);
  Spectrum c = to_spectrum(f);
  for (int idx = 0; idx < grid.n; ++idx)
    if (std::abs(grid.signed_mode(idx)) > cut) c[idx] = 0.0;
  return from_spectrum(grid, std::move(c));
}

/// Evaluates the trigonometric interpolant of f on a finer grid with n_new
/// samples over the same period. Exact for band-limited data; the old
/// Nyquist coefficient is split evenly between the +-n/2 modes so that its
/// cosine content is preserved.
inline RealField resample(const RealField& f, int n_new) {
  const auto& grid = f.grid();
  if (n_new == grid.n) return f;
  if (n_new < grid.n || n_new % 2 != 0)
    throw std::invalid_argument("resample: target size must be an even integer >= n");
  PeriodicGrid fine(n_new, grid.length);
  Spectrum c = to_spectrum(f);
  Spectrum cf(n_new, 0.0);
  const int half = grid.n / 2;
  for (int idx = 0; idx < grid.n; ++idx) {
    const int s = grid.signed_mode(idx);
    if (std::abs(s) < half) {
      cf[s >= 0 ? s : n_new + s] = c[idx];
    } else {
      // old Nyquist: real cosine amplitude split across +-half
      cf[half] += 0.5 * c[idx];
      cf[n_new - half] += 0.5 * c[idx];
    }
  }
  return from_spectrum(fine, std::move(cf));
}

namespace detail {

/// Coefficient of the basis vector (-1)^j, i.e. the Nyquist cosine mode.
inline double nyquist_coefficient(const RealField& f) {
  double acc = 0.0;
  double sign = 1.0;
  for (int j = 0; j < f.size(); ++j, sign = -sign) acc += sign * f[j];
  return acc / f.size();
}

/// Removes the Nyquist cosine component in place-by-copy.
inline RealField project_out_nyquist(const RealField& f) {
  const double c = nyquist_coefficient(f);
  if (c == 0.0) return f;
  std::vector<double> s(f.samples());
  double sign = 1.0;
  for (int j = 0; j < f.size(); ++j, sign = -sign) s[j] -= c * sign;
  return RealField(f.grid(), std::move(s));
}

}  // namespace detail

}  // namespace iwave
