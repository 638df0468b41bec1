#include "sshq/eigensolver.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sshq {

namespace {

Eigen::VectorXd mirrored(const Eigen::VectorXd& v) { return v.reverse(); }

void fix_phase(Eigen::Ref<Eigen::VectorXd> v) {
  int imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0.0) v = -v;
}

// Within a 2-dimensional near-degenerate subspace the eigenvector basis is
// arbitrary; rotate it onto eigenvectors of the site-reflection operator,
// symmetric member first.
void resolve_degenerate_pair(Eigen::MatrixXd& vectors, int a, int b) {
  Eigen::VectorXd va = vectors.col(a), vb = vectors.col(b);
  Eigen::Matrix2d r;
  r << va.dot(mirrored(va)), va.dot(mirrored(vb)),
       vb.dot(mirrored(va)), vb.dot(mirrored(vb));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(0.5 * (r + r.transpose()));
  // reflection eigenvalues are -1 and +1 in ascending order
  Eigen::Vector2d sym = es.eigenvectors().col(1);
  Eigen::Vector2d asym = es.eigenvectors().col(0);
  vectors.col(a) = (sym(0) * va + sym(1) * vb).normalized();
  vectors.col(b) = (asym(0) * va + asym(1) * vb).normalized();
}

constexpr double kDegeneracyTol = 1e-9;

}  // namespace

EigenDecomposition eig_selfadjoint(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("matrix must be square");
  double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw std::invalid_argument("matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      0.5 * (matrix + matrix.transpose()));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  EigenDecomposition d;
  d.values = es.eigenvalues();
  d.vectors = es.eigenvectors();

  int m = static_cast<int>(d.values.size());
  for (int i = 0; i + 1 < m; ++i) {
    bool pair_degenerate = d.values(i + 1) - d.values(i) < kDegeneracyTol;
    bool isolated = (i == 0 || d.values(i) - d.values(i - 1) >= kDegeneracyTol) &&
                    (i + 2 >= m || d.values(i + 2) - d.values(i + 1) >= kDegeneracyTol);
    if (pair_degenerate && isolated) resolve_degenerate_pair(d.vectors, i, i + 1);
  }
  for (int i = 0; i < m; ++i) fix_phase(d.vectors.col(i));
  return d;
}

EigenDecomposition decompose_lattice(const LatticeParams& params, double alpha) {
  LatticeParams p = params;
  p.gamma = 0.0;
  EigenDecomposition d =
      eig_selfadjoint(build_hamiltonian_hermitian(hopping_amplitudes(alpha, p), p));
  d.alpha = alpha;
  return d;
}

SpectrumSweep spectrum_sweep(const std::vector<double>& alphas,
                             const LatticeParams& params, bool parallel) {
  SpectrumSweep sweep;
  sweep.alphas = alphas;
  int n = static_cast<int>(alphas.size());
  sweep.values.resize(n, params.sites());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < n; ++i) {
    sweep.values.row(i) = decompose_lattice(params, alphas[i]).values.transpose();
  }
  return sweep;
}

EdgeStateReport classify_edge_states(const EigenDecomposition& decomp,
                                     double epsilon) {
  int m = static_cast<int>(decomp.values.size());
  if (m < 2) throw std::invalid_argument("need at least two states");

  // two states nearest epsilon
  int a = -1, b = -1;
  double da = 1e300, db = 1e300;
  for (int i = 0; i < m; ++i) {
    double d = std::abs(decomp.values(i) - epsilon);
    if (d < da) { b = a; db = da; a = i; da = d; }
    else if (d < db) { b = i; db = d; }
  }
  if (a > b) std::swap(a, b);

  auto parity_of = [&](int i) {
    double overlap = decomp.vectors.col(i).dot(mirrored(decomp.vectors.col(i)));
    return overlap >= 0.0 ? MirrorParity::Symmetric : MirrorParity::Antisymmetric;
  };
  auto end_weight = [&](int i) {
    const auto& v = decomp.vectors.col(i);
    return v(0) * v(0) + v(m - 1) * v(m - 1);
  };

  EdgeStateReport rep;
  rep.index_lo = a;
  rep.index_hi = b;
  rep.splitting = std::abs(decomp.values(b) - decomp.values(a));
  rep.edge_weight = 0.5 * (end_weight(a) + end_weight(b));
  rep.parity_lo = parity_of(a);
  rep.parity_hi = parity_of(b);
  rep.midgap_pair = rep.edge_weight >= 0.5;
  return rep;
}

Eigen::VectorXd superpose_states(const EigenDecomposition& decomp, int i, int j,
                                 int sign) {
  int m = static_cast<int>(decomp.values.size());
  if (i < 0 || i >= m || j < 0 || j >= m)
    throw std::out_of_range("state index out of range");
  if (i == j) throw std::invalid_argument("superposition requires i != j");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Eigen::VectorXd v =
      decomp.vectors.col(i) + static_cast<double>(sign) * decomp.vectors.col(j);
  return v.normalized();
}

}  // namespace sshq
