// Compares the serial and OpenMP-parallel sweep kernels on a fine alpha grid.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "sshq/eigensolver.hpp"
#include "sshq/entanglement.hpp"

using namespace sshq;

namespace {

std::vector<double> grid(int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 0.01 + (M_PI - 0.02) * i / (n - 1);
  return g;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int points = argc > 1 ? std::atoi(argv[1]) : 2000;
  LatticeParams params;
  std::vector<double> alphas = grid(points);
  Partition part = Partition::even_blocks(params.n_cells);

  double checksum_serial = 0, checksum_parallel = 0;

  double t_spec_serial = time_ms([&] {
    auto s = spectrum_sweep(alphas, params, false);
    checksum_serial += s.values.sum();
  });
  double t_spec_parallel = time_ms([&] {
    auto s = spectrum_sweep(alphas, params, true);
    checksum_parallel += s.values.sum();
  });
  double t_sd_serial = time_ms([&] {
    for (double v : sd_sweep(params, alphas, part, false)) checksum_serial += v;
  });
  double t_sd_parallel = time_ms([&] {
    for (double v : sd_sweep(params, alphas, part, true)) checksum_parallel += v;
  });

  std::printf("alpha grid points: %d\n", points);
  std::printf("spectrum_sweep  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              t_spec_serial, t_spec_parallel, t_spec_serial / t_spec_parallel);
  std::printf("sd_sweep        serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
              t_sd_serial, t_sd_parallel, t_sd_serial / t_sd_parallel);
  std::printf("checksum match: %s\n",
              checksum_serial == checksum_parallel ? "yes" : "NO");
  return 0;
}
