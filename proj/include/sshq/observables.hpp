#ifndef SSHQ_OBSERVABLES_HPP
#define SSHQ_OBSERVABLES_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "sshq/dynamics.hpp"

namespace sshq {

/// Per-site occupations |x_n(t)|^2 and their lattice total.
struct OccupationField {
  std::vector<double> times;
  Eigen::MatrixXd site_pop;  // row per sample, column per site (1..2N)
  Eigen::VectorXd total;
};

OccupationField site_populations(const Trajectory& traj);

/// Columns split by parity of the 1-based site index: odd sites form
/// sublattice A, even sites sublattice B.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sublattice_populations(
    const OccupationField& field);

/// Fraction of the total population on the two end sites; 0 for a zero state.
double edge_weight(const Eigen::VectorXcd& state);

/// Max over samples and sites of |P(n) - P(2N+1-n)|.
double mirror_asymmetry(const OccupationField& field);

/// Trapezoid-rule time average of a sampled scalar series.
double time_average(const std::vector<double>& times, const Eigen::VectorXd& y);

}  // namespace sshq

#endif
