#include "sshq/observables.hpp"

#include <stdexcept>

namespace sshq {

OccupationField site_populations(const Trajectory& traj) {
  if (traj.states.empty()) throw std::invalid_argument("empty trajectory");
  int nt = static_cast<int>(traj.states.size());
  int m = static_cast<int>(traj.states.front().size());

  OccupationField field;
  field.times = traj.times;
  field.site_pop.resize(nt, m);
  field.total.resize(nt);
  for (int i = 0; i < nt; ++i) {
    field.site_pop.row(i) = traj.states[i].cwiseAbs2().transpose();
    field.total(i) = field.site_pop.row(i).sum();
  }
  return field;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sublattice_populations(
    const OccupationField& field) {
  int nt = static_cast<int>(field.site_pop.rows());
  int m = static_cast<int>(field.site_pop.cols());
  int nodd = (m + 1) / 2, neven = m / 2;
  Eigen::MatrixXd odd(nt, nodd), even(nt, neven);
  for (int j = 0; j < m; ++j) {
    if (j % 2 == 0)
      odd.col(j / 2) = field.site_pop.col(j);  // 1-based site j+1 is odd
    else
      even.col(j / 2) = field.site_pop.col(j);
  }
  return {odd, even};
}

double edge_weight(const Eigen::VectorXcd& state) {
  double total = state.squaredNorm();
  if (total == 0.0) return 0.0;
  int m = static_cast<int>(state.size());
  return (std::norm(state(0)) + std::norm(state(m - 1))) / total;
}

double mirror_asymmetry(const OccupationField& field) {
  int m = static_cast<int>(field.site_pop.cols());
  double worst = 0.0;
  for (int i = 0; i < field.site_pop.rows(); ++i)
    for (int j = 0; j < m / 2; ++j)
      worst = std::max(worst, std::abs(field.site_pop(i, j) -
                                       field.site_pop(i, m - 1 - j)));
  return worst;
}

double time_average(const std::vector<double>& times, const Eigen::VectorXd& y) {
  if (times.size() < 2 || static_cast<int>(times.size()) != y.size())
    throw std::invalid_argument("need matching series of at least two samples");
  double integral = 0.0;
  for (size_t i = 0; i + 1 < times.size(); ++i)
    integral += 0.5 * (y(i) + y(i + 1)) * (times[i + 1] - times[i]);
  return integral / (times.back() - times.front());
}

}  // namespace sshq
