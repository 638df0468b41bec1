#ifndef SSHQ_DYNAMICS_HPP
#define SSHQ_DYNAMICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sshq/model.hpp"

namespace sshq {

/// End-site coherent drive terms.
struct PumpConfig {
  double f_a = 0.01;
  double f_b = 0.01;
  double omega_pa = 1.0;
  double omega_pb = 1.0;
  double phi_0a = 0.0;
  double phi_0b = 0.0;
};

/// Complex site amplitudes (A1, B1, ..., AN, BN) at one instant.
struct StateVector {
  Eigen::VectorXcd amps;
  double time = 0.0;
};

struct EvolutionContext {
  LatticeParams params;
  QuenchSchedule schedule;
  PumpConfig pump;
};

/// Sampled time history of one run.
struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  EvolutionContext context;
};

enum class InitialState { Vacuum, BothEdges, FirstEdge, LastEdge };
enum class Solver { Rk4, Modal };

struct RunSpec {
  EvolutionContext context;
  InitialState init = InitialState::Vacuum;
  Solver solver = Solver::Modal;
  double t_end;
  double dt;
  double sample_stride;
};

/// Drive vector f(t): nonzero only at sites 1 and 2N.
Eigen::VectorXcd drive_vector(double t, const PumpConfig& pump, int n_cells);

/// Right-hand side -i (H(alpha(t)) x + f(t)), written out per site with the
/// open-boundary terms dropped. Kept loop-based as an independent statement
/// of the evolution equations; the integrators use the matrix form.
Eigen::VectorXcd rhs(double t, const Eigen::VectorXcd& x,
                     const EvolutionContext& context);

Eigen::VectorXcd initial_amplitudes(InitialState init, int n_cells);

/// Classic fixed-step 4th-order integration. dt and sample_stride must be
/// commensurate with the schedule switch times so no step straddles a switch.
Trajectory rk4_evolve(const Eigen::VectorXcd& x0, double t_end, double dt,
                      const EvolutionContext& context, double sample_stride);

/// Closed-form evolution: per schedule interval, expand in the eigenbasis of
/// the Hermitian part and propagate each mode analytically against the
/// sinusoidal drive (secular branch on exact resonance at gamma = 0).
Trajectory modal_evolve(const Eigen::VectorXcd& x0, double t_end,
                        const EvolutionContext& context, double sample_stride);

Trajectory run_protocol(const RunSpec& spec);

}  // namespace sshq

#endif
