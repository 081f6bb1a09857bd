#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "iwave/errors.hpp"

namespace iwave {

/// Physical constants of the two-layer system. Layer 1 is the lower, denser
/// medium on -h1 < y < eta; layer 2 the upper one on eta < y < h2 under a
/// rigid lid. Interface excursions stay inside the strip -l1 < y < l2, where
/// the background current is the constant kappa. kappa may take any sign.
struct MediaParams {
  double rho1 = 1000.0;   ///< lower density [kg/m^3]
  double rho2 = 990.0;    ///< upper density [kg/m^3]
  double h1 = 100.0;      ///< lower depth [m]
  double h2 = 50.0;       ///< upper depth [m]
  double l1 = 5.0;        ///< strip extent below the mean interface [m]
  double l2 = 5.0;        ///< strip extent above the mean interface [m]
  double kappa = 0.0;     ///< strip current speed [m/s]
  double gravity = 9.8;   ///< [m/s^2]

  void validate() const {
    for (double v : {rho1, rho2, h1, h2, l1, l2, kappa, gravity})
      if (!std::isfinite(v)) throw config_error("media: parameters must be finite");
    if (!(rho1 > rho2 && rho2 > 0.0))
      throw config_error("media: stability condition rho1 > rho2 > 0 violated (rho1 = " +
                         std::to_string(rho1) + ", rho2 = " + std::to_string(rho2) + ")");
    if (!(h1 > l1 && l1 > 0.0))
      throw config_error("media: layer ordering requires h1 > l1 > 0");
    if (!(h2 > l2 && l2 > 0.0))
      throw config_error("media: layer ordering requires h2 > l2 > 0");
    if (!(gravity > 0.0)) throw config_error("media: gravity must be positive");
  }

  /// Smaller of the two strip half-extents; the hard amplitude bound.
  double strip_margin() const { return std::min(l1, l2); }

  bool operator==(const MediaParams&) const = default;
};

}  // namespace iwave
