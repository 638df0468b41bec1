#ifndef SSHQ_ENTANGLEMENT_HPP
#define SSHQ_ENTANGLEMENT_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "sshq/model.hpp"

namespace sshq {

/// Two-point function matrix <c_m^dag c_n> over a site subset.
struct CorrelationMatrix {
  Eigen::MatrixXcd entries;
  std::vector<int> sites;  // 0-based chain sites, one per row/column
};

/// Four contiguous blocks A, B, D, C in spatial order. The default split
/// gives each block N/2 sites (N even); explicit sizes cover small chains.
struct Partition {
  std::vector<int> block_a, block_b, block_d, block_c;

  static Partition even_blocks(int n_cells);
  static Partition from_sizes(int size_a, int size_b, int size_d, int size_c);

  std::vector<int> ab() const;
  std::vector<int> bc() const;
  std::vector<int> abc() const;
};

/// Half-filling ground-state correlation matrix of the full chain at gamma=0.
/// The degenerate midgap pair is filled through its mirror-symmetric member.
CorrelationMatrix ground_state_correlation(const LatticeParams& params,
                                           double alpha);

CorrelationMatrix restrict_correlation(const CorrelationMatrix& full,
                                       const std::vector<int>& sites);

/// Free-fermion von Neumann entropy from the correlation spectrum.
double entropy_from_correlation(const CorrelationMatrix& corr);

double disconnected_entropy(const CorrelationMatrix& full,
                            const Partition& partition);
double disconnected_entropy(const LatticeParams& params, double alpha,
                            const Partition& partition);

/// Heisenberg evolution of the full-chain correlation matrix under
/// H(alpha_post); gamma must be zero (number conserving, no pump).
CorrelationMatrix evolve_correlation(const CorrelationMatrix& c0,
                                     double alpha_post, double t,
                                     const LatticeParams& params);

/// S^D(t) after the alpha_pre -> alpha_post quench, one entry per grid time.
std::vector<std::pair<double, double>> sd_dynamics(
    const LatticeParams& params, double alpha_pre, double alpha_post,
    const std::vector<double>& t_grid, const Partition& partition);

/// S^D over an alpha grid; parallel across grid points unless disabled.
std::vector<double> sd_sweep(const LatticeParams& params,
                             const std::vector<double>& alphas,
                             const Partition& partition, bool parallel = true);

}  // namespace sshq

#endif
