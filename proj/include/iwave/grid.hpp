#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "iwave/errors.hpp"

namespace iwave {

/// Uniform collocation grid over one period of a 1-D periodic domain.
///
/// Nodes are x_j = j * length / n for j = 0..n-1. Wavenumbers are
/// k_m = 2*pi*m / length with the signed mode m running over the symmetric
/// band -n/2 .. n/2. The spacing is derived from (n, length) on demand, so
/// spacing * n == length holds in the stored representation.
struct PeriodicGrid {
  int n;          ///< sample count (even, >= 8)
  double length;  ///< domain period [m]

  PeriodicGrid(int n_, double length_) : n(n_), length(length_) {
    if (n < 8 || n % 2 != 0)
      throw error("PeriodicGrid: n must be even and >= 8, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
      throw error("PeriodicGrid: length must be positive and finite");
  }

  double spacing() const { return length / n; }
  double node(int j) const { return j * spacing(); }

  /// Signed mode for spectral storage index m in [0, n).
  int signed_mode(int m) const { return m <= n / 2 ? m : m - n; }

  /// Wavenumber of storage index m.
  double wavenumber(int m) const {
    return 2.0 * std::numbers::pi * signed_mode(m) / length;
  }

  /// Smallest positive wavenumber 2*pi/length.
  double fundamental() const { return 2.0 * std::numbers::pi / length; }

  /// Storage index of the Nyquist mode (n/2).
  int nyquist_index() const { return n / 2; }

  bool operator==(const PeriodicGrid&) const = default;
};

}  // namespace iwave
