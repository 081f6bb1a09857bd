// iwave command-line front end: dispersion sweeps, linearized time
// evolution, energy audits and DNO verification against the boundary-value
// oracle. Exit status: 0 success, 2 configuration error, 3 numerical
// failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iwave/cli.hpp"

namespace {

iwave::RunConfig load_config(const std::string& path) {
  if (path.empty()) return iwave::RunConfig{};
  std::ifstream in(path);
  if (!in) throw iwave::config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return iwave::parse_config(ss.str());
}

int dispatch(const std::string& command, iwave::RunConfig cfg,
             const std::string& output_path, const std::string& format,
             const iwave::cli::DispersionArgs& disp, const iwave::cli::DnoCheckArgs& dno,
             bool check_frame, std::uint64_t seed) {
  if (!output_path.empty()) cfg.output.path = output_path;
  if (!format.empty()) {
    if (format == "csv")
      cfg.output.format = iwave::OutputFormat::csv;
    else if (format == "json")
      cfg.output.format = iwave::OutputFormat::json;
    else
      throw iwave::config_error("--format must be csv or json");
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (cfg.output.path != "-" && !cfg.output.path.empty()) {
    file.open(cfg.output.path, std::ios::binary);  // binary keeps LF endings
    if (!file) throw iwave::config_error("cannot open output file '" + cfg.output.path + "'");
    os = &file;
  }

  if (command == "dispersion")
    iwave::cli::run_dispersion(cfg, disp, *os);
  else if (command == "evolve")
    iwave::cli::run_evolve(cfg, check_frame, seed, *os);
  else if (command == "energy")
    iwave::cli::run_energy(cfg, *os);
  else if (command == "dno-check")
    iwave::cli::run_dno_check(cfg, dno, *os);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iwave: two-layer interfacial waves over a uniform strip current"};
  app.require_subcommand(1);

  std::string config_path, output_path, format;
  std::uint64_t seed = 0;
  bool check_frame = false;
  app.add_option("--config", config_path, "configuration file (defaults used when omitted)");
  app.add_option("--output", output_path, "output path ('-' for stdout)");
  app.add_option("--format", format, "output format: csv or json");
  app.add_option("--seed", seed, "seed for randomized property demos");
  app.add_flag("--check-frame", check_frame,
               "report frame-equivalence residuals in the evolve summary");

  iwave::cli::DispersionArgs disp;
  auto* c_disp = app.add_subcommand("dispersion", "sweep the dispersion law");
  c_disp->add_option("--k-min", disp.k_min, "lowest wavenumber [1/m]");
  c_disp->add_option("--k-max", disp.k_max, "highest wavenumber [1/m]");
  c_disp->add_option("--samples", disp.n_samples, "number of rows");

  auto* c_evolve = app.add_subcommand("evolve", "evolve the configured initial state");
  auto* c_energy = app.add_subcommand("energy", "energy audit of the configured state");

  iwave::cli::DnoCheckArgs dno;
  auto* c_dno = app.add_subcommand("dno-check", "expansion-vs-oracle convergence table");
  c_dno->add_option("--amplitudes", dno.amplitudes, "interface amplitudes [m]");
  c_dno->add_option("--layer", dno.layer, "layer to check (1 lower, 2 upper)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, usage errors are config errors
  }

  try {
    const iwave::RunConfig cfg = load_config(config_path);
    std::string command;
    if (c_disp->parsed()) command = "dispersion";
    if (c_evolve->parsed()) command = "evolve";
    if (c_energy->parsed()) command = "energy";
    if (c_dno->parsed()) command = "dno-check";
    return dispatch(command, cfg, output_path, format, disp, dno, check_frame, seed);
  } catch (const iwave::config_error& e) {
    std::cerr << "iwave: config error: " << e.what() << "\n";
    return 2;
  } catch (const iwave::numerical_error& e) {
    std::cerr << "iwave: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "iwave: error: " << e.what() << "\n";
    return 1;
  }
}
