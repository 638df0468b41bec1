#include <doctest.h>

#include <cmath>

#include "sshq/model.hpp"

using namespace sshq;

namespace {
const LatticeParams kDefault{};  // N=20, eps=1, gamma=0, V0=0.125, mu/k^2=0.25
}

TEST_CASE("hopping amplitudes at the gapless point") {
  HoppingSet h = hopping_amplitudes(0.5 * M_PI, kDefault);
  CHECK(h.omega_vib == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(h.j1 == doctest::Approx(0.5033007372386971).epsilon(1e-12));
  CHECK(h.j2 == doctest::Approx(h.j1).epsilon(1e-14));
  // consistent with the nominal 0.5 to 1%
  CHECK(std::abs(h.j1 - 0.5) < 0.005);
}

TEST_CASE("hopping amplitudes in the topological phase") {
  HoppingSet h = hopping_amplitudes(0.75 * M_PI, kDefault);
  CHECK(h.j1 == doctest::Approx(0.22731200733024380).epsilon(1e-12));
  CHECK(h.j2 == doctest::Approx(0.88970478099174390).epsilon(1e-12));
  CHECK(h.omega_vib == doctest::Approx(std::sqrt(14.0)).epsilon(1e-14));
}

TEST_CASE("mirror identity j1(alpha) == j2(pi - alpha)") {
  for (int i = 1; i < 64; ++i) {
    double a = M_PI * i / 64.0;
    HoppingSet ha = hopping_amplitudes(a, kDefault);
    HoppingSet hb = hopping_amplitudes(M_PI - a, kDefault);
    CHECK(ha.j1 == doctest::Approx(hb.j2).epsilon(1e-12));
    CHECK(ha.j1 > 0.0);
    CHECK(ha.j2 > 0.0);
  }
}

TEST_CASE("j1 - j2 changes sign exactly once, nearest 0.5 pi") {
  int flips = 0;
  double flip_at = 0.0;
  int n = 201;
  double prev = 0.0;
  for (int i = 1; i < n; ++i) {
    double a = M_PI * i / n;
    HoppingSet h = hopping_amplitudes(a, kDefault);
    double diff = h.j1 - h.j2;
    if (i > 1 && diff * prev < 0.0) {
      ++flips;
      flip_at = a;
    }
    if (diff != 0.0) prev = diff;
  }
  CHECK(flips == 1);
  CHECK(std::abs(flip_at - 0.5 * M_PI) < M_PI / n + 1e-12);
}

TEST_CASE("alpha outside [0, pi] is rejected") {
  CHECK_THROWS(hopping_amplitudes(-0.1, kDefault));
  CHECK_THROWS(hopping_amplitudes(M_PI + 0.1, kDefault));
}

TEST_CASE("parameter validation") {
  LatticeParams p = kDefault;
  p.n_cells = 0;
  CHECK_THROWS(p.validate());
  p = kDefault;
  p.gamma = -1e-9;
  CHECK_THROWS(p.validate());
  p = kDefault;
  p.v0 = 0.0;
  CHECK_THROWS(p.validate());
}

TEST_CASE("single dimer hamiltonian") {
  LatticeParams p = kDefault;
  p.n_cells = 1;
  HoppingSet h = hopping_amplitudes(0.3 * M_PI, p);
  Eigen::MatrixXcd m = build_hamiltonian(h, p);
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 0) == std::complex<double>(1.0, 0.0));
  CHECK(m(0, 1).real() == doctest::Approx(h.j1));
  CHECK(m(1, 0) == m(0, 1));
}

TEST_CASE("hamiltonian structure at full scale") {
  LatticeParams p = kDefault;
  p.gamma = 0.0025;
  HoppingSet h = hopping_amplitudes(0.75 * M_PI, p);
  Eigen::MatrixXcd m = build_hamiltonian(h, p);
  REQUIRE(m.rows() == 40);

  // diagonal eps - i gamma, tridiagonal, open ends
  for (int i = 0; i < 40; ++i)
    CHECK(m(i, i) == std::complex<double>(1.0, -0.0025));
  CHECK(m(0, 39) == std::complex<double>(0.0, 0.0));
  CHECK(m(39, 0) == std::complex<double>(0.0, 0.0));
  for (int i = 0; i < 39; ++i) {
    double expected = (i % 2 == 0) ? h.j1 : h.j2;
    CHECK(m(i, i + 1).real() == doctest::Approx(expected));
    CHECK(m(i, i + 1).imag() == 0.0);
  }
  CHECK(m(0, 1).real() == doctest::Approx(0.22731200733024380).epsilon(1e-12));

  // subtracting the diagonal leaves a real symmetric matrix
  Eigen::MatrixXcd off = m;
  off.diagonal().setZero();
  CHECK((off - off.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(off.imag().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hermitian limit at gamma = 0") {
  HoppingSet h = hopping_amplitudes(0.6 * M_PI, kDefault);
  Eigen::MatrixXcd m = build_hamiltonian(h, kDefault);
  CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quench schedule branches") {
  double tp = 2.0 * M_PI;
  QuenchSchedule s{0.75 * M_PI, 0.5 * M_PI, 0.75 * M_PI, 10 * tp, 30 * tp};
  CHECK(schedule_alpha(5 * tp, s) == 0.75 * M_PI);
  CHECK(schedule_alpha(10 * tp, s) == 0.75 * M_PI);  // closed left interval
  CHECK(schedule_alpha(10 * tp + 1e-9, s) == 0.5 * M_PI);
  CHECK(schedule_alpha(30 * tp, s) == 0.5 * M_PI);
  CHECK(schedule_alpha(35 * tp, s) == 0.75 * M_PI);
}
