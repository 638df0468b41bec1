#include "sshq/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sshq {

void LatticeParams::validate() const {
  if (n_cells < 1) throw std::invalid_argument("n_cells must be >= 1");
  if (gamma < 0.0) throw std::invalid_argument("gamma must be >= 0");
  if (v0 <= 0.0) throw std::invalid_argument("v0 must be > 0");
  if (mu_k2 <= 0.0) throw std::invalid_argument("mu_k2 must be > 0");
}

namespace {

double well_displacement(double alpha, const LatticeParams& p) {
  double c = std::cos(alpha);
  // argument of arccos is in [-1/2, 1/2]; clamp only guards rounding
  double arg = std::clamp(c / 2.0, -1.0, 1.0);
  return std::acos(arg) * std::pow(8.0 * p.v0 * p.mu_k2 * (4.0 - c * c), 0.25);
}

double hopping_from_delta(double omega, double delta) {
  return 0.5 * omega * std::exp(-delta * delta) * (delta * delta + 0.5);
}

}  // namespace

HoppingSet hopping_amplitudes(double alpha, const LatticeParams& params) {
  params.validate();
  if (alpha < 0.0 || alpha > M_PI)
    throw std::invalid_argument("alpha must lie in [0, pi]");
  double c = std::cos(alpha);
  HoppingSet h;
  h.omega_vib = std::sqrt(8.0 * params.v0 / params.mu_k2 * (4.0 - c * c));
  h.delta1 = well_displacement(alpha, params);
  h.delta2 = well_displacement(M_PI - alpha, params);
  h.j1 = hopping_from_delta(h.omega_vib, h.delta1);
  h.j2 = hopping_from_delta(h.omega_vib, h.delta2);
  return h;
}

Eigen::MatrixXd build_hamiltonian_hermitian(const HoppingSet& hoppings,
                                            const LatticeParams& params) {
  params.validate();
  int m = params.sites();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  h.diagonal().setConstant(params.epsilon);
  for (int i = 0; i + 1 < m; ++i) {
    double j = (i % 2 == 0) ? hoppings.j1 : hoppings.j2;
    h(i, i + 1) = j;
    h(i + 1, i) = j;
  }
  return h;
}

Eigen::MatrixXcd build_hamiltonian(const HoppingSet& hoppings,
                                   const LatticeParams& params) {
  Eigen::MatrixXcd h = build_hamiltonian_hermitian(hoppings, params)
                           .cast<std::complex<double>>();
  h.diagonal().array() -= std::complex<double>(0.0, params.gamma);
  return h;
}

}  // namespace sshq
