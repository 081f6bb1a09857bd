#pragma once

#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "iwave/bvp.hpp"
#include "iwave/config.hpp"
#include "iwave/dispersion.hpp"
#include "iwave/evolution.hpp"
#include "iwave/output.hpp"

// Command layer shared by the CLI binary and the test suites. Each command
// takes a resolved RunConfig and writes one CSV or JSON document to the
// given stream, so outputs are reproducible in-process.

namespace iwave::cli {

struct DispersionArgs {
  double k_min = 0.0;
  double k_max = 2.0;
  int n_samples = 101;
};

struct DnoCheckArgs {
  std::vector<double> amplitudes{0.01, 0.02, 0.04};
  int layer = 1;
};

namespace detail {

inline nlohmann::ordered_json config_meta(const RunConfig& cfg) {
  nlohmann::ordered_json m;
  m["media"] = {{"rho1", cfg.media.rho1}, {"rho2", cfg.media.rho2}, {"h1", cfg.media.h1},
                {"h2", cfg.media.h2},     {"l1", cfg.media.l1},     {"l2", cfg.media.l2},
                {"kappa", cfg.media.kappa}, {"gravity", cfg.media.gravity}};
  m["grid"] = {{"n", cfg.grid.n}, {"length", cfg.grid.length}};
  if (const auto* mono = std::get_if<MonochromaticIC>(&cfg.initial)) {
    m["initial"] = {{"type", "monochromatic"}, {"k", mono->k},         {"eta_amp", mono->eta_amp},
                    {"xi_amp", mono->xi_amp},  {"phase", mono->phase}};
  } else {
    const auto& g = std::get<GaussianIC>(cfg.initial);
    m["initial"] = {{"type", "gaussian"}, {"center", g.center}, {"width", g.width},
                    {"eta_amp", g.eta_amp}};
  }
  m["evolve"] = {{"dt", cfg.evolve.dt}, {"n_steps", cfg.evolve.n_steps},
                 {"record_every", cfg.evolve.record_every}};
  m["dno"] = {{"order", cfg.dno_order}};
  m["solver"] = {{"tol", cfg.solver_tol}};
  m["output"] = {{"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"},
                 {"path", cfg.output.path}};
  if (cfg.shear) {
    nlohmann::ordered_json lower = nlohmann::ordered_json::array();
    for (const auto& [y, u] : cfg.shear->lower) lower.push_back({y, u});
    nlohmann::ordered_json upper = nlohmann::ordered_json::array();
    for (const auto& [y, u] : cfg.shear->upper) upper.push_back({y, u});
    m["shear"] = {{"sigma", cfg.shear->sigma}, {"lower", lower}, {"upper", upper}};
  }
  return m;
}

inline void emit(const RunConfig& cfg, const Table& t, std::ostream& os) {
  if (cfg.output.format == OutputFormat::csv)
    write_csv(os, t);
  else
    write_json(os, config_meta(cfg), t);
}

/// Reminder that the out-of-strip profile is descriptive only: the dynamics
/// read nothing from it but kappa, which lives in the media section.
inline void warn_if_shear(const RunConfig& cfg) {
  if (cfg.shear)
    std::clog << "iwave: note: a shear profile is configured, but only media.kappa enters "
                 "the wave dynamics; the out-of-strip samples affect background energy "
                 "bookkeeping only\n";
}

}  // namespace detail

/// Sweep of the dispersion law with group velocities and the three limiting
/// regimes for cross-reading. At k = 0 the full law takes its long-wave
/// value while the deep-water columns and group velocities are left NaN.
inline void run_dispersion(const RunConfig& cfg, const DispersionArgs& args,
                           std::ostream& os) {
  if (!(args.k_min >= 0.0) || !(args.k_max > args.k_min))
    throw config_error("dispersion: need 0 <= k_min < k_max");
  if (args.n_samples < 1) throw config_error("dispersion: need n_samples >= 1");
  detail::warn_if_shear(cfg);

  Table t;
  t.schema = "iwave.dispersion.v1";
  t.columns = {"k",          "c_plus",        "c_minus",       "omega_plus",
               "omega_minus", "group_plus",    "group_minus",   "c_plus_deep",
               "c_minus_deep", "c_plus_long",  "c_minus_long",  "c_plus_single",
               "c_minus_single"};
  const DispersionBranch lw = wave_speed(cfg.media, 0.0);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < args.n_samples; ++i) {
    const double k = args.n_samples == 1
                         ? args.k_min
                         : args.k_min + (args.k_max - args.k_min) * i / (args.n_samples - 1);
    const DispersionBranch full = wave_speed(cfg.media, k);
    const DispersionBranch single = single_medium_speed(cfg.media, k);
    double gp = nan, gm = nan, cpd = nan, cmd = nan;
    if (k > 0.0) {
      gp = group_velocity(cfg.media, k, Branch::plus);
      gm = group_velocity(cfg.media, k, Branch::minus);
      const DispersionBranch deep = deep_water_speed(cfg.media, k);
      cpd = deep.c_plus;
      cmd = deep.c_minus;
    }
    t.rows.push_back({k, full.c_plus, full.c_minus, full.omega_plus, full.omega_minus, gp, gm,
                      cpd, cmd, lw.c_plus, lw.c_minus, single.c_plus, single.c_minus});
  }
  detail::emit(cfg, t, os);
}

/// Energy audit of the configured initial state at the configured DNO order:
/// the three Hamiltonian terms, their total, the momentum invariant, and the
/// background offset of the shear profile when one is configured (NaN
/// otherwise; the offset uses the grid length as the band length).
inline void run_energy(const RunConfig& cfg, std::ostream& os) {
  detail::warn_if_shear(cfg);
  const WaveState state = build_initial_state(cfg);
  const EnergyBreakdown e = energy(cfg.media, state, cfg.dno_order, cfg.solver_tol);
  const double mom = momentum(state);
  const double offset = cfg.shear ? background_energy_offset(*cfg.shear, cfg.grid.length)
                                  : std::numeric_limits<double>::quiet_NaN();
  Table t;
  t.schema = "iwave.energy.v1";
  t.columns = {"kinetic", "potential", "current_term", "total", "momentum",
               "background_offset"};
  t.rows.push_back({e.kinetic, e.potential, e.current_term, e.total, mom, offset});
  detail::emit(cfg, t, os);
}

/// Time evolution of the configured state. Rows hold every recorded snapshot
/// in long format; the summary block reports the conservation drifts and,
/// when check_frame is set, the frame-equivalence residual of the configured
/// state plus one seeded random band-limited state.
inline void run_evolve(const RunConfig& cfg, bool check_frame, std::uint64_t seed,
                       std::ostream& os) {
  detail::warn_if_shear(cfg);
  const WaveState state = build_initial_state(cfg);
  const Trajectory traj =
      evolve(cfg.media, state, cfg.evolve.dt, cfg.evolve.n_steps, cfg.evolve.record_every);

  Table t;
  t.schema = "iwave.evolve.v1";
  t.columns = {"snapshot", "time", "node", "x", "eta", "xi"};
  for (std::size_t s = 0; s < traj.times.size(); ++s)
    for (int j = 0; j < cfg.grid.n; ++j)
      t.rows.push_back({static_cast<double>(s), traj.times[s], static_cast<double>(j),
                        cfg.grid.node(j), traj.states[s].eta()[j], traj.states[s].xi()[j]});

  const double h0 = traj.energies.front().total;
  const double m0 = traj.momenta.front();
  double denergy = 0.0, dmomentum = 0.0;
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    denergy = std::max(denergy, std::abs(traj.energies[s].total - h0));
    dmomentum = std::max(dmomentum, std::abs(traj.momenta[s] - m0));
  }
  t.summary.emplace_back("energy_initial", h0);
  t.summary.emplace_back("energy_drift_rel", h0 != 0.0 ? denergy / std::abs(h0) : denergy);
  t.summary.emplace_back("momentum_initial", m0);
  t.summary.emplace_back("momentum_drift_abs", dmomentum);
  if (check_frame) {
    t.summary.emplace_back(
        "frame_residual",
        frame_equivalence_residual(cfg.media, state, cfg.evolve.dt, cfg.evolve.n_steps));
    const int max_mode = std::max(1, std::min(cfg.grid.n / 2 - 1, cfg.grid.n / 4));
    const double amp = 0.05 * cfg.media.strip_margin();
    const WaveState random_state =
        random_band_limited_state(cfg.grid, max_mode, amp, amp, seed);
    t.summary.emplace_back(
        "frame_residual_random",
        frame_equivalence_residual(cfg.media, random_state, cfg.evolve.dt,
                                   cfg.evolve.n_steps));
  }
  detail::emit(cfg, t, os);
}

namespace detail {

struct DnoCheckRow {
  double amplitude = 0.0;
  int order = 0;
  double error = 0.0;     ///< relative expansion-vs-oracle error
  double exponent = 0.0;  ///< observed scaling vs the previous amplitude
};

/// Expansion-vs-oracle comparison at each amplitude and truncation order.
/// The oracle is the Richardson-extrapolated BVP solve with its flat-strip
/// bias removed, i.e. the comparison is perturbation-vs-perturbation:
///   error(a) = || (G_order(a) - G_0) - (BVP(a) - BVP(0)) || / ||BVP(a)||,
/// which cancels the amplitude-independent part of the mesh error that would
/// otherwise mask the O(a^{order+1}) truncation signal.
inline std::vector<DnoCheckRow> dno_check_rows(const RunConfig& cfg,
                                               const DnoCheckArgs& args) {
  const PeriodicGrid& grid = cfg.grid;
  const double margin = cfg.media.strip_margin();
  for (double a : args.amplitudes)
    if (!(a >= 0.0) || a >= margin)
      throw config_error("dno-check: amplitudes must satisfy 0 <= a < min(l1, l2)");
  if (args.layer != 1 && args.layer != 2)
    throw config_error("dno-check: layer must be 1 or 2");

  const double k0 = grid.fundamental();
  const auto shape = RealField::from_function(grid, [&](double x) { return std::cos(k0 * x); });
  const RealField xi = shape;

  const int mult = (grid.n >= 256) ? 1 : (256 / grid.n + (256 % grid.n ? 1 : 0));
  const BvpResolution res{grid.n * mult, 96};

  const RealField flat_oracle =
      dno_bvp_extrapolated(cfg.media, args.layer, RealField::zeros(grid), xi, res);
  const RealField flat_expansion = g0(args.layer == 1 ? cfg.media.h1 : cfg.media.h2, xi);

  std::vector<DnoCheckRow> rows;
  std::vector<double> prev_amp(3, -1.0), prev_err(3, 0.0);
  for (double a : args.amplitudes) {
    const RealField eta = a * shape;
    const RealField oracle = dno_bvp_extrapolated(cfg.media, args.layer, eta, xi, res);
    const double scale = l2_norm(oracle);
    for (int order = 0; order <= 2; ++order) {
      const RealField expansion = apply_G(cfg.media, args.layer, eta, order, xi);
      const double err =
          l2_norm((expansion - flat_expansion) - (oracle - flat_oracle)) / scale;
      DnoCheckRow row;
      row.amplitude = a;
      row.order = order;
      row.error = err;
      row.exponent = std::numeric_limits<double>::quiet_NaN();
      if (prev_amp[order] > 0.0 && a > 0.0 && prev_err[order] > 0.0 && err > 0.0)
        row.exponent = std::log(err / prev_err[order]) / std::log(a / prev_amp[order]);
      rows.push_back(row);
      prev_amp[order] = a;
      prev_err[order] = err;
    }
  }
  return rows;
}

}  // namespace detail

/// Convergence table of the truncated expansions against the boundary-value
/// oracle: (amplitude, order, error, observed scaling exponent).
inline void run_dno_check(const RunConfig& cfg, const DnoCheckArgs& args, std::ostream& os) {
  detail::warn_if_shear(cfg);
  const auto rows = detail::dno_check_rows(cfg, args);
  Table t;
  t.schema = "iwave.dno_check.v1";
  t.columns = {"amplitude", "order", "error", "exponent"};
  for (const auto& r : rows)
    t.rows.push_back({r.amplitude, static_cast<double>(r.order), r.error, r.exponent});
  detail::emit(cfg, t, os);
}

}  // namespace iwave::cli
