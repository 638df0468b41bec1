#ifndef SSHQ_EIGENSOLVER_HPP
#define SSHQ_EIGENSOLVER_HPP

#include <Eigen/Dense>
#include <vector>

#include "sshq/model.hpp"

namespace sshq {

/// Ascending eigenvalues and orthonormal eigenvectors of the Hermitian
/// (gamma-stripped) lattice Hamiltonian. Near-degenerate pairs are
/// re-orthogonalized against the site-reflection operator so that the
/// mirror-symmetric member comes first; each column's largest-magnitude
/// component is made positive.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
  double alpha = 0.0;
};

enum class MirrorParity { Symmetric, Antisymmetric };

struct EdgeStateReport {
  int index_lo = -1;   // 0-based state indices of the pair nearest epsilon
  int index_hi = -1;
  double splitting = 0.0;
  double edge_weight = 0.0;  // mean weight of the pair on sites {1, 2N}
  MirrorParity parity_lo = MirrorParity::Symmetric;
  MirrorParity parity_hi = MirrorParity::Antisymmetric;
  bool midgap_pair = false;  // false in trivial/gapless phases
};

EigenDecomposition eig_selfadjoint(const Eigen::MatrixXd& matrix);

/// Decomposition of the lattice at a given alpha, gamma forced to zero.
EigenDecomposition decompose_lattice(const LatticeParams& params, double alpha);

struct SpectrumSweep {
  std::vector<double> alphas;
  Eigen::MatrixXd values;  // row per alpha, ascending eigenvalues
};

/// One gamma=0 decomposition per grid point; parallel across alphas
/// unless `parallel` is false (serial reference path).
SpectrumSweep spectrum_sweep(const std::vector<double>& alphas,
                             const LatticeParams& params, bool parallel = true);

EdgeStateReport classify_edge_states(const EigenDecomposition& decomp,
                                     double epsilon);

/// Normalized (psi_i + sign * psi_j) / sqrt(2).
Eigen::VectorXd superpose_states(const EigenDecomposition& decomp, int i, int j,
                                 int sign);

}  // namespace sshq

#endif
