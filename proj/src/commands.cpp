#include "sshq/commands.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sshq/eigensolver.hpp"
#include "sshq/entanglement.hpp"
#include "sshq/io.hpp"
#include "sshq/observables.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sshq {

namespace {

namespace fs = std::filesystem;

double drive_period(const RunConfig& c) { return 2.0 * M_PI / c.pump_omega; }

std::vector<double> alpha_grid(const RunConfig& c) {
  if (c.alpha_steps < 2) throw std::runtime_error("alpha_steps must be >= 2");
  std::vector<double> grid(c.alpha_steps);
  for (int i = 0; i < c.alpha_steps; ++i)
    grid[i] = (c.alpha_min +
               (c.alpha_max - c.alpha_min) * i / (c.alpha_steps - 1)) *
              M_PI;
  return grid;
}

void configure_threads(const RunConfig& c) {
#ifdef _OPENMP
  if (c.threads > 0) omp_set_num_threads(c.threads);
#else
  (void)c;
#endif
}

void cmd_hoppings(const RunConfig& c) {
  LatticeParams p = lattice_from(c);
  std::vector<std::vector<double>> rows;
  for (double a : alpha_grid(c)) {
    HoppingSet h = hopping_amplitudes(a, p);
    rows.push_back({a / M_PI, h.j1, h.j2, h.omega_vib, h.delta1, h.delta2});
  }
  write_csv(fs::path(c.out_dir) / "hoppings.csv",
            {"alpha_over_pi", "j1", "j2", "omega", "delta1", "delta2"}, rows);
}

void cmd_spectrum(const RunConfig& c) {
  LatticeParams p = lattice_from(c);
  SpectrumSweep sweep = spectrum_sweep(alpha_grid(c), p, c.threads != 1);
  std::vector<std::string> header{"alpha_over_pi"};
  for (int k = 1; k <= p.sites(); ++k)
    header.push_back("e_" + std::to_string(k));
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < sweep.alphas.size(); ++i) {
    std::vector<double> row{sweep.alphas[i] / M_PI};
    for (int k = 0; k < p.sites(); ++k) row.push_back(sweep.values(i, k));
    rows.push_back(std::move(row));
  }
  write_csv(fs::path(c.out_dir) / "spectrum.csv", header, rows);
}

void cmd_eigenstate(const RunConfig& c) {
  LatticeParams p = lattice_from(c);
  EigenDecomposition d = decompose_lattice(p, c.alpha * M_PI);

  std::vector<std::vector<double>> evrows;
  for (int k = 0; k < p.sites(); ++k)
    evrows.push_back({static_cast<double>(k + 1), d.values(k)});
  write_csv(fs::path(c.out_dir) / "eigenvalues.csv", {"state", "energy"}, evrows);

  std::vector<double> requested = parse_number_list(c.states);
  std::vector<int> idx;
  for (double s : requested) idx.push_back(static_cast<int>(s) - 1);

  std::vector<std::string> header{"site"};
  for (int k : idx) header.push_back("psi_" + std::to_string(k + 1));
  if (idx.size() == 2) {
    header.push_back("superpose_plus");
    header.push_back("superpose_minus");
  }
  Eigen::VectorXd plus, minus;
  if (idx.size() == 2) {
    plus = superpose_states(d, idx[0], idx[1], +1);
    minus = superpose_states(d, idx[0], idx[1], -1);
  }
  std::vector<std::vector<double>> rows;
  for (int site = 0; site < p.sites(); ++site) {
    std::vector<double> row{static_cast<double>(site + 1)};
    for (int k : idx) {
      if (k < 0 || k >= p.sites())
        throw std::runtime_error("state index out of range in 'states'");
      row.push_back(d.vectors(site, k));
    }
    if (idx.size() == 2) {
      row.push_back(plus(site));
      row.push_back(minus(site));
    }
    rows.push_back(std::move(row));
  }
  write_csv(fs::path(c.out_dir) / "eigenstates.csv", header, rows);

  EdgeStateReport rep = classify_edge_states(d, p.epsilon);
  write_csv(fs::path(c.out_dir) / "edge_report.csv",
            {"state_lo", "state_hi", "splitting", "edge_weight", "midgap_pair",
             "parity_lo_symmetric", "parity_hi_symmetric"},
            {{static_cast<double>(rep.index_lo + 1),
              static_cast<double>(rep.index_hi + 1), rep.splitting,
              rep.edge_weight, rep.midgap_pair ? 1.0 : 0.0,
              rep.parity_lo == MirrorParity::Symmetric ? 1.0 : 0.0,
              rep.parity_hi == MirrorParity::Symmetric ? 1.0 : 0.0}});
}

void cmd_sd(const RunConfig& c) {
  LatticeParams p = lattice_from(c);
  p.gamma = 0.0;
  Partition part = Partition::even_blocks(p.n_cells);
  std::vector<double> grid = alpha_grid(c);
  std::vector<double> sd = sd_sweep(p, grid, part, c.threads != 1);
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < grid.size(); ++i)
    rows.push_back({grid[i] / M_PI, sd[i], sd[i] / std::log(2.0)});
  write_csv(fs::path(c.out_dir) / "sd.csv",
            {"alpha_over_pi", "sd", "sd_over_ln2"}, rows);
}

void cmd_sd_dynamics(const RunConfig& c) {
  LatticeParams p = lattice_from(c);
  p.gamma = 0.0;  // number-conserving setting only
  Partition part = Partition::even_blocks(p.n_cells);
  double period = drive_period(c);
  std::vector<double> t_grid;
  for (double t = 0.0; t <= c.t_end * period + 1e-9; t += c.sample_stride * period)
    t_grid.push_back(t);
  auto table = sd_dynamics(p, c.alpha_t * M_PI, c.alpha_g * M_PI, t_grid, part);
  std::vector<std::vector<double>> rows;
  for (auto& [t, sd] : table)
    rows.push_back({t / period, sd, sd / std::log(2.0)});
  write_csv(fs::path(c.out_dir) / "sd_dynamics.csv",
            {"t_over_Tp", "sd", "sd_over_ln2"}, rows);
}

void write_trajectory_outputs(const Trajectory& traj, const fs::path& dir,
                              double period) {
  OccupationField field = site_populations(traj);
  int m = static_cast<int>(field.site_pop.cols());

  std::vector<std::string> header{"t_over_Tp"};
  for (int s = 1; s <= m; ++s) header.push_back("site_" + std::to_string(s));
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < field.times.size(); ++i) {
    std::vector<double> row{field.times[i] / period};
    for (int s = 0; s < m; ++s) row.push_back(field.site_pop(i, s));
    rows.push_back(std::move(row));
  }
  write_csv(dir / "occupations.csv", header, rows);

  std::vector<std::vector<double>> totals;
  for (size_t i = 0; i < field.times.size(); ++i)
    totals.push_back({field.times[i] / period, field.total(i)});
  write_csv(dir / "totals.csv", {"t_over_Tp", "p_tot"}, totals);

  render_heatmap(field, dir / "heatmap.pgm");
}

void cmd_evolve(const RunConfig& c) {
  Trajectory traj = run_protocol(runspec_from(c));
  write_trajectory_outputs(traj, fs::path(c.out_dir), drive_period(c));
}

void cmd_sweep(const RunConfig& c) {
  std::vector<double> gammas = parse_number_list(c.sweep_gammas);
  if (gammas.empty()) throw std::runtime_error("sweep_gammas is empty");
  int n = static_cast<int>(gammas.size());
  std::exception_ptr failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (c.threads != 1)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      RunConfig rc = c;
      rc.gamma = gammas[i];
      Trajectory traj = run_protocol(runspec_from(rc));
      char label[40];
      std::snprintf(label, sizeof label, "gamma_%g", gammas[i]);
      fs::path dir = fs::path(c.out_dir) / label;
      write_trajectory_outputs(traj, dir, drive_period(c));
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

LatticeParams lattice_from(const RunConfig& c) {
  LatticeParams p;
  p.n_cells = c.n_cells;
  p.epsilon = c.epsilon;
  p.gamma = c.gamma;
  p.v0 = c.v0;
  p.mu_k2 = c.mu_k2;
  p.unit = (c.pump_fa != 0.0 || c.pump_fb != 0.0) ? EnergyUnit::PumpFrequency
                                                  : EnergyUnit::BareJ;
  p.validate();
  return p;
}

QuenchSchedule schedule_from(const RunConfig& c) {
  double period = drive_period(c);
  return {c.alpha_t * M_PI, c.alpha_g * M_PI, c.alpha_t * M_PI,
          c.t_a * period, c.t_b * period};
}

PumpConfig pump_from(const RunConfig& c) {
  return {c.pump_fa, c.pump_fb, c.pump_omega, c.pump_omega,
          c.pump_phi0, c.pump_phi0};
}

RunSpec runspec_from(const RunConfig& c) {
  RunSpec spec;
  spec.context = {lattice_from(c), schedule_from(c), pump_from(c)};
  if (c.init == "vacuum") spec.init = InitialState::Vacuum;
  else if (c.init == "both_edges") spec.init = InitialState::BothEdges;
  else if (c.init == "first_edge") spec.init = InitialState::FirstEdge;
  else if (c.init == "last_edge") spec.init = InitialState::LastEdge;
  else throw std::runtime_error("unknown initial-condition tag: " + c.init);

  if (c.solver == "rk4") spec.solver = Solver::Rk4;
  else if (c.solver == "modal") spec.solver = Solver::Modal;
  else throw std::runtime_error("unknown solver: " + c.solver);

  double period = drive_period(c);
  spec.t_end = c.t_end * period;
  spec.dt = c.dt * period;
  spec.sample_stride = c.sample_stride * period;
  return spec;
}

void run_command(const RunConfig& c) {
  configure_threads(c);
  switch (c.command) {
    case Command::Hoppings: return cmd_hoppings(c);
    case Command::Spectrum: return cmd_spectrum(c);
    case Command::Eigenstate: return cmd_eigenstate(c);
    case Command::Sd: return cmd_sd(c);
    case Command::SdDynamics: return cmd_sd_dynamics(c);
    case Command::Evolve: return cmd_evolve(c);
    case Command::Sweep: return cmd_sweep(c);
    case Command::None: break;
  }
  throw std::runtime_error("missing required command");
}

}  // namespace sshq
