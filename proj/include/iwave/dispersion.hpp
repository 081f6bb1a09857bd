#pragma once

#include <cmath>

#include "iwave/media.hpp"

namespace iwave {

/// The two roots of the dispersion law at one wavenumber. The roots are
/// symmetric about the current speed: c_plus + c_minus = 2 kappa.
struct DispersionBranch {
  double k = 0.0;
  double c_plus = 0.0;
  double c_minus = 0.0;
  double omega_plus = 0.0;   ///< c_plus * k
  double omega_minus = 0.0;  ///< c_minus * k
};

enum class Branch { plus, minus };

namespace detail {

/// (c - kappa)^2 of the full two-layer law,
///   g (rho1 - rho2) tanh(h1 k) tanh(h2 k) / (k (rho1 tanh(h2 k) + rho2 tanh(h1 k))),
/// even in k; k = 0 returns the long-wave limit
///   g h1 h2 (rho1 - rho2) / (rho1 h2 + rho2 h1).
/// rho2 = 0 is admitted here: the same expression then reduces to the
/// single-medium law, and the single-medium entry point routes through this
/// code path.
inline double interface_speed_sq(double g, double rho1, double rho2, double h1, double h2,
                                 double k) {
  k = std::abs(k);
  if (k * std::max(h1, h2) < 1e-100)  // guard subnormal tanh arguments
    k = 0.0;
  if (k == 0.0) return g * h1 * h2 * (rho1 - rho2) / (rho1 * h2 + rho2 * h1);
  const double t1 = std::tanh(h1 * k), t2 = std::tanh(h2 * k);
  return g * (rho1 - rho2) * t1 * t2 / (k * (rho1 * t2 + rho2 * t1));
}

inline DispersionBranch branch_from_speed_sq(double k, double kappa, double cs2) {
  const double s = std::sqrt(cs2);
  DispersionBranch b;
  b.k = std::abs(k);
  b.c_plus = kappa + s;
  b.c_minus = kappa - s;
  b.omega_plus = b.c_plus * b.k;
  b.omega_minus = b.c_minus * b.k;
  return b;
}

}  // namespace detail

/// Full dispersion law of the two-layer system. Negative k is folded to |k|
/// (the speed-squared expression is even); k = 0 yields the long-wave limit.
inline DispersionBranch wave_speed(const MediaParams& p, double k) {
  p.validate();
  return detail::branch_from_speed_sq(
      k, p.kappa, detail::interface_speed_sq(p.gravity, p.rho1, p.rho2, p.h1, p.h2, k));
}

/// Infinite-depth limit (c - kappa)^2 = (g/k)(rho1 - rho2)/(rho1 + rho2).
/// k = 0 is rejected: the deep-water speed genuinely diverges there.
inline DispersionBranch deep_water_speed(const MediaParams& p, double k) {
  p.validate();
  k = std::abs(k);
  if (k == 0.0)
    throw std::invalid_argument("deep_water_speed: diverges at k = 0");
  const double cs2 = (p.gravity / k) * (p.rho1 - p.rho2) / (p.rho1 + p.rho2);
  return detail::branch_from_speed_sq(k, p.kappa, cs2);
}

/// Single-medium limit rho2 -> 0, i.e. (c - kappa)^2 = (g/k) tanh(h1 k),
/// with the shallow value g h1 at k = 0. Shares the wave_speed code path so
/// the two agree bit-for-bit at rho2 = 0.
inline DispersionBranch single_medium_speed(const MediaParams& p, double k) {
  p.validate();
  return detail::branch_from_speed_sq(
      k, p.kappa, detail::interface_speed_sq(p.gravity, p.rho1, 0.0, p.h1, p.h2, k));
}

/// d Omega / dk of the requested branch by a Richardson-extrapolated centered
/// difference with relative step 1e-5. The law has no closed-form derivative
/// worth maintaining; the five-point stencil is accurate to O(step^4).
inline double group_velocity(const MediaParams& p, double k, Branch branch) {
  if (!(k > 0.0)) throw std::invalid_argument("group_velocity: need k > 0");
  auto omega = [&](double kk) {
    const DispersionBranch b = wave_speed(p, kk);
    return branch == Branch::plus ? b.omega_plus : b.omega_minus;
  };
  const double h = 1e-5 * k;
  return (omega(k - 2 * h) - 8.0 * omega(k - h) + 8.0 * omega(k + h) - omega(k + 2 * h)) /
         (12.0 * h);
}

}  // namespace iwave
