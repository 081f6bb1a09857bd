#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "iwave/media.hpp"
#include "iwave/spectral.hpp"
#include "iwave/state.hpp"

// Finite-difference Dirichlet-Neumann solver on the deformed layer, used to
// validate the truncated spectral expansions against the exact operator.
//
// The layer (lower: -h1 <= y <= eta(x), upper: eta(x) <= y <= h2) is mapped
// to the rectangle [0, L) x [0, 1] by the vertical stretch
//   lower: y = -h1 + sigma d(x),  d = h1 + eta,
//   upper: y =  h2 - sigma d(x),  d = h2 - eta,
// with sigma = 0 on the rigid boundary and sigma = 1 on the interface.
// Laplace's equation transforms to
//   Phi_xx + 2 sigma_x Phi_xsigma + (sigma_x^2 + 1/d^2) Phi_sigmasigma
//          + sigma_xx Phi_sigma = 0,
//   sigma_x = -sigma d'/d,   sigma_xx = sigma (2 d'^2/d^2 - d''/d),
// discretized with second-order centered differences, a symmetric ghost node
// at the rigid boundary (Phi_sigma = 0 there) and Dirichlet data xi on the
// interface. d' and d'' use centered differences as well, so the solver
// shares no machinery with the spectral operators it checks; the only
// spectral step is the exact trigonometric resampling of band-limited input
// data when the requested nx exceeds the field's grid.
//
// The scaled normal derivative returned is
//   lower: -eta_x Phi_x + (1 + eta_x^2) Phi_sigma / d,
//   upper: +eta_x Phi_x + (1 + eta_x^2) Phi_sigma / d,
// at sigma = 1, with Phi_sigma one-sided (second order) and Phi_x centered.
//
// This module is a correctness oracle; performance is out of scope.

namespace iwave {

/// Mesh of the boundary-value solve. nx must be the field grid's n or an
/// integer multiple of it.
struct BvpResolution {
  int nx = 64;
  int ny = 64;

  void validate(const PeriodicGrid& grid) const {
    if (nx < 32 || ny < 32)
      throw std::invalid_argument("BvpResolution: need nx >= 32 and ny >= 32");
    if (nx % grid.n != 0)
      throw std::invalid_argument("BvpResolution: nx must be a multiple of the grid's n");
    if (nx % 2 != 0) throw std::invalid_argument("BvpResolution: nx must be even");
  }
};

namespace detail {

/// Unpreconditioned BiCGSTAB on a matrix-free operator. Returns the final
/// relative residual; the caller owns the convergence decision.
template <class Op>
double bicgstab(const Op& apply, const std::vector<double>& b, std::vector<double>& x,
                double rel_tol, int max_iter) {
  const std::size_t n = b.size();
  auto dot = [n](const std::vector<double>& u, const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += u[i] * v[i];
    return acc;
  };
  const double b_norm = std::sqrt(dot(b, b));
  if (b_norm == 0.0) {
    x.assign(n, 0.0);
    return 0.0;
  }
  std::vector<double> r(n), r0(n), p(n), v(n), s(n), t(n), ax(n);
  apply(x, ax);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ax[i];
  r0 = r;
  p = r;
  double rho = dot(r0, r);
  double res = std::sqrt(dot(r, r)) / b_norm;
  for (int it = 0; it < max_iter && res > rel_tol; ++it) {
    apply(p, v);
    const double alpha = rho / dot(r0, v);
    for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
    apply(s, t);
    const double tt = dot(t, t);
    const double omega = tt > 0.0 ? dot(t, s) / tt : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i] + omega * s[i];
      r[i] = s[i] - omega * t[i];
    }
    res = std::sqrt(dot(r, r)) / b_norm;
    const double rho_new = dot(r0, r);
    if (rho == 0.0 || omega == 0.0) break;  // breakdown; report current residual
    const double beta = (rho_new / rho) * (alpha / omega);
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    rho = rho_new;
  }
  return res;
}

}  // namespace detail

/// Exact (non-expanded) DNO of one layer: solves the interior Laplace problem
/// with Dirichlet data xi_layer on the interface and a rigid outer boundary,
/// and returns the scaled normal derivative on the field's grid. xi_layer is
/// the single-layer trace (units m^2/s). Second-order accurate in 1/ny and
/// 1/nx. The interior solve runs 100x tighter than any comparison this
/// oracle feeds (relative 1e-11).
inline RealField dno_bvp(const MediaParams& p, int layer, const RealField& eta,
                         const RealField& xi_layer, const BvpResolution& res) {
  p.validate();
  if (layer != 1 && layer != 2)
    throw std::invalid_argument("dno_bvp: layer must be 1 or 2");
  detail::require_same_grid(eta, xi_layer, "dno_bvp");
  res.validate(eta.grid());
  if (max_abs(eta) >= p.strip_margin())
    throw strip_breach_error("dno_bvp: max|eta| must stay below min(l1, l2)");

  const int nx = res.nx, ny = res.ny;
  const RealField eta_f = resample(eta, nx);
  const RealField xi_f = resample(xi_layer, nx);
  const double L = eta.grid().length;
  const double dx = L / nx, ds = 1.0 / ny;
  const double h = layer == 1 ? p.h1 : p.h2;

  // layer thickness and its centered-difference x-derivatives
  std::vector<double> d(nx), d1(nx), d2(nx);
  for (int i = 0; i < nx; ++i) d[i] = layer == 1 ? h + eta_f[i] : h - eta_f[i];
  for (int i = 0; i < nx; ++i) {
    const int ip = (i + 1) % nx, im = (i + nx - 1) % nx;
    d1[i] = (d[ip] - d[im]) / (2.0 * dx);
    d2[i] = (d[ip] - 2.0 * d[i] + d[im]) / (dx * dx);
  }

  // unknowns Phi_{i,j}, j = 0..ny-1 (j = ny is the Dirichlet interface row)
  const auto at = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
  const std::size_t n_unknown = static_cast<std::size_t>(nx) * ny;

  auto apply = [&](const std::vector<double>& u, std::vector<double>& out) {
    for (int j = 0; j < ny; ++j) {
      const double sg = j * ds;
      for (int i = 0; i < nx; ++i) {
        const int ip = (i + 1) % nx, im = (i + nx - 1) % nx;
        const double sx = -sg * d1[i] / d[i];
        const double cxx = 1.0 / (dx * dx);
        const double css = (sx * sx + 1.0 / (d[i] * d[i])) / (ds * ds);
        const double cs = sg * (2.0 * d1[i] * d1[i] / (d[i] * d[i]) - d2[i] / d[i]) /
                          (2.0 * ds);
        const double cxs = 2.0 * sx / (4.0 * dx * ds);
        double acc = (u[at(ip, j)] - 2.0 * u[at(i, j)] + u[at(im, j)]) * cxx;
        if (j == 0) {
          // rigid boundary: ghost Phi_{i,-1} = Phi_{i,1}; sx and cs vanish at sigma = 0
          acc += (2.0 * u[at(i, 1)] - 2.0 * u[at(i, 0)]) * css;
        } else {
          const double up = j + 1 < ny ? u[at(i, j + 1)] : 0.0;
          const double upp = j + 1 < ny ? u[at(ip, j + 1)] : 0.0;
          const double upm = j + 1 < ny ? u[at(im, j + 1)] : 0.0;
          acc += (up - 2.0 * u[at(i, j)] + u[at(i, j - 1)]) * css;
          acc += (up - u[at(i, j - 1)]) * cs;
          acc += (upp - u[at(ip, j - 1)] - upm + u[at(im, j - 1)]) * cxs;
        }
        out[at(i, j)] = acc;
      }
    }
  };

  // Dirichlet contributions from the interface row j = ny enter the RHS
  std::vector<double> rhs(n_unknown, 0.0);
  {
    const int j = ny - 1;
    const double sg = j * ds;
    for (int i = 0; i < nx; ++i) {
      const int ip = (i + 1) % nx, im = (i + nx - 1) % nx;
      const double sx = -sg * d1[i] / d[i];
      const double css = (sx * sx + 1.0 / (d[i] * d[i])) / (ds * ds);
      const double cs = sg * (2.0 * d1[i] * d1[i] / (d[i] * d[i]) - d2[i] / d[i]) /
                        (2.0 * ds);
      const double cxs = 2.0 * sx / (4.0 * dx * ds);
      rhs[at(i, j)] -= xi_f[i] * css + xi_f[i] * cs + (xi_f[ip] - xi_f[im]) * cxs;
    }
  }

  std::vector<double> phi(n_unknown, 0.0);
  const double solver_tol = 1e-11;
  const double reached = detail::bicgstab(apply, rhs, phi, solver_tol, 40 * (nx + ny));
  if (reached > 100.0 * solver_tol)
    throw convergence_error(
        "dno_bvp: interior solve stalled at relative residual " + std::to_string(reached) +
            " (resolution too coarse for the requested interface steepness?)",
        reached);

  // scaled normal derivative on the fine grid, then restriction to the
  // field grid (the coarse nodes are a subset of the fine ones)
  std::vector<double> out_fine(nx);
  for (int i = 0; i < nx; ++i) {
    const int ip = (i + 1) % nx, im = (i + nx - 1) % nx;
    const double phi_s =
        (3.0 * xi_f[i] - 4.0 * phi[at(i, ny - 1)] + phi[at(i, ny - 2)]) / (2.0 * ds);
    const double phi_x = (xi_f[ip] - xi_f[im]) / (2.0 * dx);
    const double ex = layer == 1 ? d1[i] : -d1[i];  // eta_x from the thickness derivative
    const double sign = layer == 1 ? -1.0 : 1.0;
    out_fine[i] = sign * ex * phi_x + (1.0 + ex * ex) * phi_s / d[i];
  }
  const int stride = nx / eta.grid().n;
  std::vector<double> out(eta.grid().n);
  for (int i = 0; i < eta.grid().n; ++i) out[i] = out_fine[i * stride];
  return RealField(eta.grid(), std::move(out));
}

/// Richardson extrapolation of dno_bvp in the vertical resolution: combines
/// solves at ny and 2*ny to cancel the leading second-order error term.
inline RealField dno_bvp_extrapolated(const MediaParams& p, int layer, const RealField& eta,
                                      const RealField& xi_layer, const BvpResolution& res) {
  BvpResolution fine{res.nx, 2 * res.ny};
  const RealField coarse = dno_bvp(p, layer, eta, xi_layer, res);
  const RealField refined = dno_bvp(p, layer, eta, xi_layer, fine);
  return (4.0 / 3.0) * refined - (1.0 / 3.0) * coarse;
}

/// Centered finite-difference directional derivative of a state functional,
/// (F(s + step d) - F(s - step d)) / (2 step). The independent gradient
/// oracle for the variational derivatives.
template <class F>
double functional_gradient_fd(F&& functional, const WaveState& s, const WaveState& direction,
                              double step) {
  if (!(step > 0.0)) throw std::invalid_argument("functional_gradient_fd: step must be > 0");
  const double plus = functional(axpy(s, step, direction));
  const double minus = functional(axpy(s, -step, direction));
  return (plus - minus) / (2.0 * step);
}

}  // namespace iwave
