#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "iwave/media.hpp"

namespace iwave {

/// Depth profile of the background current outside the strip. Inside the
/// strip U == kappa; the tails connect the strip continuously to U = -sigma
/// at the lid and to rest at the bed. Only kappa ever enters the wave
/// dynamics; the tails matter solely for the background energy bookkeeping
/// below.
struct ShearProfile {
  MediaParams media;
  double sigma = 0.0;  ///< surface drift speed [m/s], >= 0

  /// (y, U) samples on [-h1, -l1], y strictly increasing.
  std::vector<std::pair<double, double>> lower;
  /// (y, U) samples on [l2, h2], y strictly increasing.
  std::vector<std::pair<double, double>> upper;

  void validate() const {
    media.validate();
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
      throw config_error("shear: sigma must be finite and >= 0");
    const double tol = 1e-9 * (1.0 + std::abs(media.kappa) + sigma);
    auto check_sequence = [&](const std::vector<std::pair<double, double>>& seq,
                              const char* name, double y_first, double y_last,
                              double u_first, double u_last) {
      if (seq.size() < 2)
        throw config_error(std::string("shear.") + name + ": need at least two (y, U) samples");
      for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i].first > seq[i - 1].first))
          throw config_error(std::string("shear.") + name + ": y values must be strictly increasing");
      const double ytol = 1e-9 * (1.0 + std::abs(y_first) + std::abs(y_last));
      if (std::abs(seq.front().first - y_first) > ytol ||
          std::abs(seq.back().first - y_last) > ytol)
        throw config_error(std::string("shear.") + name + ": samples must span [" +
                           std::to_string(y_first) + ", " + std::to_string(y_last) + "]");
      if (std::abs(seq.front().second - u_first) > tol)
        throw config_error(std::string("shear.") + name + ": U at y = " +
                           std::to_string(y_first) + " must equal " + std::to_string(u_first));
      if (std::abs(seq.back().second - u_last) > tol)
        throw config_error(std::string("shear.") + name + ": U at y = " +
                           std::to_string(y_last) + " must equal " + std::to_string(u_last));
    };
    // continuity: U(-h1) = 0 and U(-l1) = kappa below, U(l2) = kappa and
    // U(h2) = -sigma above
    check_sequence(lower, "lower", -media.h1, -media.l1, 0.0, media.kappa);
    check_sequence(upper, "upper", media.l2, media.h2, media.kappa, -sigma);
  }

  bool operator==(const ShearProfile&) const = default;
};

namespace detail {
inline double trapezoid_u_squared(const std::vector<std::pair<double, double>>& seq) {
  double acc = 0.0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const double dy = seq[i].first - seq[i - 1].first;
    const double a = seq[i - 1].second, b = seq[i].second;
    acc += 0.5 * dy * (a * a + b * b);
  }
  return acc;
}
}  // namespace detail

/// Energy of the background current over a band of horizontal extent
/// band_length, per unit width:
///   (1/2) sum_i rho_i ( \int U_i^2 dy + kappa^2 * l_i ) * band_length,
/// the strip contribution using that the interface elevation has zero mean.
/// This is a constant of the motion; it is reported for a finite band
/// because it diverges on the whole line.
inline double background_energy_offset(const ShearProfile& p, double band_length) {
  if (!(band_length >= 0.0) || !std::isfinite(band_length))
    throw std::invalid_argument("background_energy_offset: band_length must be finite and >= 0");
  const double lower = detail::trapezoid_u_squared(p.lower);
  const double upper = detail::trapezoid_u_squared(p.upper);
  const double k2 = p.media.kappa * p.media.kappa;
  return 0.5 * band_length *
         (p.media.rho1 * (lower + k2 * p.media.l1) + p.media.rho2 * (upper + k2 * p.media.l2));
}

}  // namespace iwave
