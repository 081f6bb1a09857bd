#pragma once

#include <cmath>
#include <iostream>
#include <string>

#include "iwave/media.hpp"
#include "iwave/spectral.hpp"

// Truncated Dirichlet-Neumann operators for the two layers, their
// rho-weighted combination B, its iterative inversion, and the composite
// kinetic-energy operator G1 B^{-1} G2. With D = -i d/dx the expansion terms
// in powers of the interface elevation are
//
//   G_{i0}      = D tanh(h_i D)
//   G_{11}(eta) =  D eta D - G_{10} eta G_{10}
//   G_{21}(eta) = -D eta D + G_{20} eta G_{20}
//   G_{i2}(eta) = -1/2 ( D^2 eta^2 G_{i0} - 2 G_{i0} eta G_{i0} eta G_{i0}
//                        + G_{i0} eta^2 D^2 )
//
// In real operations D eta D f = -d/dx(eta df/dx) and D^2 = -d^2/dx^2, so
// every pipeline below stays real. Pointwise products are dealiased on both
// sides (inputs and output), which keeps each truncated operator exactly
// self-adjoint on the discrete grid.

namespace iwave {

/// Symbol of G_{i0}: k tanh(h k), even in k, 0 at k = 0.
inline double g0_symbol(double h, double k) {
  k = std::abs(k);
  return k * std::tanh(h * k);
}

/// Symbol of the flat-interface operator B0 = rho1 G_{20} + rho2 G_{10}.
inline double b0_symbol(const MediaParams& p, double k) {
  k = std::abs(k);
  return k * (p.rho1 * std::tanh(p.h2 * k) + p.rho2 * std::tanh(p.h1 * k));
}

/// Symbol of the flat-interface composite G_{10} B0^{-1} G_{20}:
/// k tanh(h1 k) tanh(h2 k) / (rho1 tanh(h2 k) + rho2 tanh(h1 k)); 0 at k = 0.
inline double lambda_symbol(const MediaParams& p, double k) {
  k = std::abs(k);
  if (k == 0.0) return 0.0;
  const double t1 = std::tanh(p.h1 * k), t2 = std::tanh(p.h2 * k);
  return k * t1 * t2 / (p.rho1 * t2 + p.rho2 * t1);
}

/// Amplitude guard for the strip condition -l1 < eta < l2. Warns on stderr
/// beyond half the margin, throws strip_breach_error at the margin.
inline void check_strip(const MediaParams& p, const RealField& eta) {
  const double top = max_value(eta), bottom = min_value(eta);
  if (top >= p.l2 || bottom <= -p.l1)
    throw strip_breach_error("interface leaves the strip: eta range [" +
                             std::to_string(bottom) + ", " + std::to_string(top) +
                             "] vs bounds (-" + std::to_string(p.l1) + ", " +
                             std::to_string(p.l2) + ")");
  if (max_abs(eta) > 0.5 * p.strip_margin())
    std::clog << "iwave: warning: max|eta| = " << max_abs(eta)
              << " exceeds half the strip margin " << p.strip_margin() << "\n";
}

namespace detail {

inline double layer_depth(const MediaParams& p, int layer) {
  if (layer != 1 && layer != 2)
    throw std::invalid_argument("layer must be 1 (lower) or 2 (upper)");
  return layer == 1 ? p.h1 : p.h2;
}

inline void require_order(int order) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("truncation order must be 0, 1 or 2");
}

/// Dealiased pointwise product P(P a . P b); symmetric in the operator sense.
inline RealField dp(const RealField& a, const RealField& b) {
  return dealias(hadamard(dealias(a), dealias(b)));
}

inline RealField apply_g0(double h, const RealField& f) {
  return apply_multiplier(
      FourierMultiplier::even([h](double k) { return g0_symbol(h, k); }, 0.0), f);
}

/// -d^2/dx^2, the multiplier k^2.
inline RealField apply_d2(const RealField& f) {
  static const FourierMultiplier d2 =
      FourierMultiplier::even([](double k) { return k * k; }, 0.0);
  return apply_multiplier(d2, f);
}

inline RealField g1_impl(const MediaParams& p, int layer, const RealField& eta,
                         const RealField& f) {
  const double h = layer_depth(p, layer);
  const RealField d_eta_d = -derivative(dp(eta, derivative(f)));
  const RealField g0_eta_g0 = apply_g0(h, dp(eta, apply_g0(h, f)));
  return layer == 1 ? d_eta_d - g0_eta_g0 : g0_eta_g0 - d_eta_d;
}

inline RealField g2_impl(const MediaParams& p, int layer, const RealField& eta,
                         const RealField& f) {
  const double h = layer_depth(p, layer);
  const RealField eta2 = dp(eta, eta);
  const RealField t1 = apply_d2(dp(eta2, apply_g0(h, f)));
  const RealField t2 = apply_g0(h, dp(eta, apply_g0(h, dp(eta, apply_g0(h, f)))));
  const RealField t3 = apply_g0(h, dp(eta2, apply_d2(f)));
  return -0.5 * t1 + t2 - 0.5 * t3;
}

inline RealField apply_G_impl(const MediaParams& p, int layer, const RealField& eta,
                              int order, const RealField& f) {
  RealField acc = apply_g0(layer_depth(p, layer), f);
  if (order >= 1) acc += g1_impl(p, layer, eta, f);
  if (order >= 2) acc += g2_impl(p, layer, eta, f);
  return acc;
}

inline RealField apply_B_impl(const MediaParams& p, const RealField& eta, int order,
                              const RealField& f) {
  return p.rho1 * apply_G_impl(p, 2, eta, order, f) +
         p.rho2 * apply_G_impl(p, 1, eta, order, f);
}

}  // namespace detail

/// Flat-interface DNO G_{i0} = D tanh(h D) for a layer of depth h.
inline RealField g0(double h, const RealField& f) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("g0: depth must be positive and finite");
  return detail::apply_g0(h, f);
}

/// First-order expansion term; bilinear in (eta, f), dealiased output.
inline RealField g1(const MediaParams& p, int layer, const RealField& eta,
                    const RealField& f) {
  p.validate();
  detail::require_same_grid(eta, f, "g1");
  check_strip(p, eta);
  return detail::g1_impl(p, layer, eta, f);
}

/// Second-order expansion term; quadratic in eta, linear in f.
inline RealField g2(const MediaParams& p, int layer, const RealField& eta,
                    const RealField& f) {
  p.validate();
  detail::require_same_grid(eta, f, "g2");
  check_strip(p, eta);
  return detail::g2_impl(p, layer, eta, f);
}

/// DNO truncated at the requested order (0, 1 or 2).
inline RealField apply_G(const MediaParams& p, int layer, const RealField& eta, int order,
                         const RealField& f) {
  p.validate();
  detail::require_order(order);
  detail::require_same_grid(eta, f, "apply_G");
  detail::layer_depth(p, layer);
  check_strip(p, eta);
  return detail::apply_G_impl(p, layer, eta, order, f);
}

/// B = rho1 G2(eta) + rho2 G1(eta) at the requested truncation order.
inline RealField apply_B(const MediaParams& p, const RealField& eta, int order,
                         const RealField& f) {
  p.validate();
  detail::require_order(order);
  detail::require_same_grid(eta, f, "apply_B");
  check_strip(p, eta);
  return detail::apply_B_impl(p, eta, order, f);
}

namespace detail {

inline RealField apply_b0_inverse(const MediaParams& p, const RealField& f) {
  return apply_multiplier(
      FourierMultiplier::even([&p](double k) { return 1.0 / b0_symbol(p, k); }, 0.0), f);
}

/// Preconditioned conjugate gradient on the zero-mean subspace, used when
/// the fixed-point contraction stalls. B is symmetric positive definite
/// there for admissible eta.
inline RealField solve_B_pcg(const MediaParams& p, const RealField& eta, int order,
                             const RealField& rhs, double tol, RealField x, int max_iter,
                             double* final_residual) {
  RealField r = rhs - apply_B_impl(p, eta, order, x);
  const double target = tol * l2_norm(rhs);
  RealField z = apply_b0_inverse(p, r);
  RealField dir = z;
  double rz = inner_product(r, z);
  double rnorm = l2_norm(r);
  for (int it = 0; it < max_iter && rnorm > target; ++it) {
    const RealField bdir = apply_B_impl(p, eta, order, dir);
    const double curvature = inner_product(dir, bdir);
    if (!(curvature > 0.0)) break;
    const double alpha = rz / curvature;
    x += alpha * dir;
    r -= alpha * bdir;
    rnorm = l2_norm(r);
    z = apply_b0_inverse(p, r);
    const double rz_new = inner_product(r, z);
    dir = z + (rz_new / rz) * dir;
    rz = rz_new;
  }
  *final_residual = rnorm;
  return x;
}

}  // namespace detail

/// Solves B f = rhs to the requested relative tolerance. rhs must have zero
/// mean (B annihilates constants); the solution is gauged to zero mean. The
/// residual contract ||B f - rhs|| <= tol ||rhs|| is re-checked on the
/// returned solution and a convergence_error carries the final residual if
/// the iteration budget runs out.
///
/// Strategy: fixed-point iteration f <- f + B0^{-1}(rhs - B f) with B0 the
/// flat-interface diagonal operator, falling back to a B0-preconditioned
/// conjugate-gradient iteration if the contraction stalls.
inline RealField solve_B(const MediaParams& p, const RealField& eta, int order,
                         const RealField& rhs, double tol) {
  p.validate();
  detail::require_order(order);
  detail::require_same_grid(eta, rhs, "solve_B");
  check_strip(p, eta);
  if (!(tol > 0.0)) throw std::invalid_argument("solve_B: tol must be positive");

  const double rhs_norm = l2_norm(rhs);
  if (std::abs(mean(rhs)) > 1e-12 * (max_abs(rhs) + 1e-300))
    throw std::invalid_argument("solve_B: rhs must have zero mean (B annihilates constants)");
  if (rhs_norm == 0.0) return RealField::zeros(rhs.grid());

  const double target = tol * rhs_norm;
  RealField x = detail::apply_b0_inverse(p, rhs);
  if (order == 0) {
    // exact diagonal inversion; the contract is still checked, not assumed
    const double rn = l2_norm(rhs - detail::apply_B_impl(p, eta, order, x));
    if (rn > target)
      throw convergence_error("solve_B: diagonal inversion misses the residual contract", rn);
    return x;
  }

  double rnorm = rhs_norm;
  bool stalled = false;
  constexpr int kMaxFixedPoint = 60;
  for (int it = 0; it < kMaxFixedPoint; ++it) {
    const RealField r = rhs - detail::apply_B_impl(p, eta, order, x);
    const double rn = l2_norm(r);
    if (rn <= target) return x;
    if (rn > 0.9 * rnorm) {
      stalled = true;
      break;
    }
    rnorm = rn;
    x += detail::apply_b0_inverse(p, r);
  }

  double final_residual = rnorm;
  x = detail::solve_B_pcg(p, eta, order, rhs, tol, x, 500, &final_residual);
  if (final_residual > target)
    throw convergence_error("solve_B: no convergence (" +
                                std::string(stalled ? "fixed point stalled, " : "") +
                                "relative residual " + std::to_string(final_residual / rhs_norm) +
                                " > tol " + std::to_string(tol) + ")",
                            final_residual);
  return x;
}

/// Composite kinetic operator G1(eta) B^{-1} G2(eta) applied to xi at the
/// requested truncation order. The k = 0 component of xi is annihilated by
/// G2, which implements the constant gauge of the conjugate variable.
inline RealField composite_kinetic(const MediaParams& p, const RealField& eta, int order,
                                   const RealField& xi, double tol) {
  p.validate();
  detail::require_order(order);
  detail::require_same_grid(eta, xi, "composite_kinetic");
  check_strip(p, eta);
  const RealField g2xi = detail::apply_G_impl(p, 2, eta, order, xi);
  const RealField inv = solve_B(p, eta, order, g2xi, tol);
  return detail::apply_G_impl(p, 1, eta, order, inv);
}

}  // namespace iwave
