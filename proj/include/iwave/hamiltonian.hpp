#pragma once

#include "iwave/dno.hpp"
#include "iwave/state.hpp"

namespace iwave {

/// Energy of a state per unit width, split into the three terms of the
/// Hamiltonian: kinetic (1/2)<xi, G1 B^{-1} G2 xi>, potential
/// (1/2)(rho1-rho2) g <eta, eta>, and the current term -kappa Int xi eta_x dx.
struct EnergyBreakdown {
  double kinetic = 0.0;       ///< [J/m]
  double potential = 0.0;     ///< [J/m]
  double current_term = 0.0;  ///< [J/m]
  double total = 0.0;         ///< kinetic + potential + current_term
};

/// The translation invariant Int xi eta_x dx, conserved by the dynamics and
/// the only channel through which the current speed enters the energy.
inline double momentum(const WaveState& s) {
  return inner_product(s.xi(), derivative(s.eta()));
}

inline EnergyBreakdown energy(const MediaParams& p, const WaveState& s, int order,
                              double tol) {
  p.validate();
  EnergyBreakdown e;
  e.kinetic = 0.5 * inner_product(s.xi(), composite_kinetic(p, s.eta(), order, s.xi(), tol));
  e.potential = 0.5 * (p.rho1 - p.rho2) * p.gravity * inner_product(s.eta(), s.eta());
  e.current_term = -p.kappa * momentum(s);
  e.total = e.kinetic + e.potential + e.current_term;
  return e;
}

struct VariationalDerivatives {
  RealField dH_deta;
  RealField dH_dxi;
};

/// Gradients of the quadratic Hamiltonian:
///   dH/dxi  = Lambda xi - kappa eta_x,
///   dH/deta = (rho1 - rho2) g eta + kappa xi_x,
/// with Lambda the flat-interface composite multiplier. The linearized flow
/// is eta_t = dH/dxi, xi_t = -dH/deta.
inline VariationalDerivatives quadratic_variational_derivatives(const MediaParams& p,
                                                                const WaveState& s) {
  p.validate();
  const auto lambda =
      FourierMultiplier::even([&p](double k) { return lambda_symbol(p, k); }, 0.0);
  RealField dxi = apply_multiplier(lambda, s.xi()) - p.kappa * derivative(s.eta());
  RealField deta = (p.rho1 - p.rho2) * p.gravity * s.eta() + p.kappa * derivative(s.xi());
  return {std::move(deta), std::move(dxi)};
}

}  // namespace iwave
