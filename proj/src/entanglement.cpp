#include "sshq/entanglement.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sshq/eigensolver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sshq {

namespace {

constexpr double kClampTol = 1e-9;

std::vector<int> iota_block(int first, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

double binary_entropy_sum(const Eigen::VectorXd& zeta) {
  auto xlogx = [](double z) { return z > 0.0 ? z * std::log(z) : 0.0; };
  double s = 0.0;
  for (int i = 0; i < zeta.size(); ++i) {
    double z = zeta(i);
    if (z < -kClampTol || z > 1.0 + kClampTol)
      throw std::runtime_error("correlation eigenvalue outside [0,1]");
    z = std::min(1.0, std::max(0.0, z));
    s -= xlogx(z) + xlogx(1.0 - z);
  }
  return s;
}

}  // namespace

Partition Partition::even_blocks(int n_cells) {
  if (n_cells % 2 != 0)
    throw std::invalid_argument("even split requires an even cell count");
  int h = n_cells / 2;  // N/2 sites per block
  return from_sizes(h, h, h, h);
}

Partition Partition::from_sizes(int size_a, int size_b, int size_d, int size_c) {
  if (size_a < 1 || size_b < 1 || size_d < 1 || size_c < 1)
    throw std::invalid_argument("partition blocks must be nonempty");
  Partition p;
  p.block_a = iota_block(0, size_a);
  p.block_b = iota_block(size_a, size_b);
  p.block_d = iota_block(size_a + size_b, size_d);
  p.block_c = iota_block(size_a + size_b + size_d, size_c);
  return p;
}

std::vector<int> Partition::ab() const { return concat(block_a, block_b); }
std::vector<int> Partition::bc() const { return concat(block_b, block_c); }
std::vector<int> Partition::abc() const { return concat(ab(), block_c); }

CorrelationMatrix ground_state_correlation(const LatticeParams& params,
                                           double alpha) {
  if (params.gamma != 0.0)
    throw std::invalid_argument("ground-state correlation requires gamma = 0");
  EigenDecomposition d = decompose_lattice(params, alpha);
  int n = params.n_cells;
  // lowest N eigenvectors; the parity-ordered decomposition puts the
  // mirror-symmetric midgap state at index N-1 when the pair is degenerate
  Eigen::MatrixXd filled = d.vectors.leftCols(n);
  CorrelationMatrix c;
  c.entries = (filled * filled.transpose()).cast<std::complex<double>>();
  c.sites = iota_block(0, params.sites());
  return c;
}

CorrelationMatrix restrict_correlation(const CorrelationMatrix& full,
                                       const std::vector<int>& sites) {
  int m = static_cast<int>(full.sites.size());
  CorrelationMatrix sub;
  sub.entries.resize(sites.size(), sites.size());
  for (size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 0 || sites[i] >= m)
      throw std::out_of_range("site index outside correlation matrix");
    for (size_t j = 0; j < sites.size(); ++j)
      sub.entries(i, j) = full.entries(sites[i], sites[j]);
    sub.sites.push_back(full.sites[sites[i]]);
  }
  return sub;
}

double entropy_from_correlation(const CorrelationMatrix& corr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(corr.entries);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("correlation eigendecomposition failed");
  return binary_entropy_sum(es.eigenvalues());
}

double disconnected_entropy(const CorrelationMatrix& full,
                            const Partition& partition) {
  auto s = [&](const std::vector<int>& sites) {
    return entropy_from_correlation(restrict_correlation(full, sites));
  };
  return s(partition.ab()) + s(partition.bc()) - s(partition.abc()) -
         s(partition.block_b);
}

double disconnected_entropy(const LatticeParams& params, double alpha,
                            const Partition& partition) {
  return disconnected_entropy(ground_state_correlation(params, alpha), partition);
}

CorrelationMatrix evolve_correlation(const CorrelationMatrix& c0,
                                     double alpha_post, double t,
                                     const LatticeParams& params) {
  if (params.gamma != 0.0)
    throw std::invalid_argument("correlation evolution requires gamma = 0");
  if (static_cast<int>(c0.sites.size()) != params.sites())
    throw std::invalid_argument("correlation evolution needs the full chain");

  EigenDecomposition d = decompose_lattice(params, alpha_post);
  Eigen::VectorXcd phases =
      (std::complex<double>(0.0, -1.0) * t * d.values.cast<std::complex<double>>())
          .array()
          .exp();
  Eigen::MatrixXcd u = d.vectors.cast<std::complex<double>>() *
                       phases.asDiagonal() *
                       d.vectors.transpose().cast<std::complex<double>>();
  CorrelationMatrix ct;
  ct.entries = u.conjugate() * c0.entries * u.transpose();
  ct.sites = c0.sites;
  return ct;
}

std::vector<std::pair<double, double>> sd_dynamics(
    const LatticeParams& params, double alpha_pre, double alpha_post,
    const std::vector<double>& t_grid, const Partition& partition) {
  CorrelationMatrix c0 = ground_state_correlation(params, alpha_pre);
  std::vector<std::pair<double, double>> out(t_grid.size());
  int n = static_cast<int>(t_grid.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    CorrelationMatrix ct = evolve_correlation(c0, alpha_post, t_grid[i], params);
    out[i] = {t_grid[i], disconnected_entropy(ct, partition)};
  }
  return out;
}

std::vector<double> sd_sweep(const LatticeParams& params,
                             const std::vector<double>& alphas,
                             const Partition& partition, bool parallel) {
  std::vector<double> out(alphas.size());
  int n = static_cast<int>(alphas.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < n; ++i)
    out[i] = disconnected_entropy(params, alphas[i], partition);
  return out;
}

}  // namespace sshq
