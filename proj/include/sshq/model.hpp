#ifndef SSHQ_MODEL_HPP
#define SSHQ_MODEL_HPP

#include <Eigen/Dense>

namespace sshq {

/// Label for the unit all energies are expressed in. Pumped runs use the
/// pump frequency, unpumped runs use the bare hopping J; the numbers are
/// identical (epsilon = 1 fixes the scale), only output labels differ.
enum class EnergyUnit { PumpFrequency, BareJ };

/// Static description of the optical SSH lattice.
struct LatticeParams {
  int n_cells = 20;       // unit cells N; total sites 2N
  double epsilon = 1.0;   // onsite energy
  double gamma = 0.0;     // uniform damping rate, >= 0
  double v0 = 0.125;      // optical depth
  double mu_k2 = 0.25;    // oscillator mass over laser wavenumber squared
  EnergyUnit unit = EnergyUnit::PumpFrequency;

  int sites() const { return 2 * n_cells; }
  void validate() const;
};

/// Couplings derived from the lattice phase alpha.
struct HoppingSet {
  double j1;         // intra-cell
  double j2;         // inter-cell
  double omega_vib;  // vibrational frequency of the local wells
  double delta1;
  double delta2;
};

/// Piecewise-constant lattice phase alpha(t). Intervals are closed on the
/// left: alpha_initial on [0, t_a], alpha_mid on (t_a, t_b], alpha_final
/// after t_b.
struct QuenchSchedule {
  double alpha_initial;
  double alpha_mid;
  double alpha_final;
  double t_a = 0.0;
  double t_b = 0.0;

  double alpha_at(double t) const {
    if (t <= t_a) return alpha_initial;
    if (t <= t_b) return alpha_mid;
    return alpha_final;
  }
};

/// Hopping amplitudes J1, J2 of the harmonic-approximation optical lattice
/// at phase alpha in [0, pi].
HoppingSet hopping_amplitudes(double alpha, const LatticeParams& params);

/// Dense 2N x 2N lattice Hamiltonian: diagonal epsilon - i*gamma, real
/// symmetric alternating couplings J1, J2, open boundary conditions.
Eigen::MatrixXcd build_hamiltonian(const HoppingSet& hoppings,
                                   const LatticeParams& params);

/// Hermitian part only (gamma stripped); used by all spectral analyses.
Eigen::MatrixXd build_hamiltonian_hermitian(const HoppingSet& hoppings,
                                            const LatticeParams& params);

inline double schedule_alpha(double t, const QuenchSchedule& schedule) {
  return schedule.alpha_at(t);
}

}  // namespace sshq

#endif
