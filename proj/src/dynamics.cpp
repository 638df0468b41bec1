#include "sshq/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "sshq/eigensolver.hpp"

namespace sshq {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

bool commensurate(double interval, double step) {
  double n = std::round(interval / step);
  return std::abs(n * step - interval) <= 1e-9 * std::max(1.0, interval);
}

// Interval boundaries {0, t_a, t_b, t_end} restricted to [0, t_end].
std::vector<double> interval_bounds(const QuenchSchedule& s, double t_end) {
  std::vector<double> b{0.0};
  for (double t : {s.t_a, s.t_b})
    if (t > b.back() && t < t_end) b.push_back(t);
  b.push_back(t_end);
  return b;
}

void check_grid(const QuenchSchedule& s, double t_end, double dt,
                double stride) {
  if (dt <= 0.0 || stride <= 0.0)
    throw std::invalid_argument("dt and sample_stride must be > 0");
  if (!commensurate(stride, dt))
    throw std::invalid_argument("sample_stride must be a multiple of dt");
  for (double t : {s.t_a, s.t_b, t_end}) {
    if (t <= 0.0 || t >= t_end + 1e-12) continue;
    if (!commensurate(t, dt) || !commensurate(t, stride))
      throw std::invalid_argument(
          "dt/sample_stride must be commensurate with the switch times");
  }
  if (!commensurate(t_end, dt) || !commensurate(t_end, stride))
    throw std::invalid_argument("dt/sample_stride must divide t_end");
}

}  // namespace

Eigen::VectorXcd drive_vector(double t, const PumpConfig& pump, int n_cells) {
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(2 * n_cells);
  f(0) = pump.f_a * std::exp(kI * (pump.phi_0a - pump.omega_pa * t));
  f(2 * n_cells - 1) = pump.f_b * std::exp(kI * (pump.phi_0b - pump.omega_pb * t));
  return f;
}

Eigen::VectorXcd rhs(double t, const Eigen::VectorXcd& x,
                     const EvolutionContext& context) {
  const LatticeParams& p = context.params;
  int n = p.n_cells;
  HoppingSet h = hopping_amplitudes(context.schedule.alpha_at(t), p);
  Complex onsite(p.epsilon, -p.gamma);

  Eigen::VectorXcd dx(2 * n);
  auto a = [&](int l) { return x(2 * (l - 1)); };      // A_l, 1-based cell
  auto b = [&](int l) { return x(2 * (l - 1) + 1); };  // B_l
  for (int l = 1; l <= n; ++l) {
    Complex da = h.j1 * b(l) + (l > 1 ? h.j2 * b(l - 1) : Complex{}) + onsite * a(l);
    Complex db = h.j1 * a(l) + (l < n ? h.j2 * a(l + 1) : Complex{}) + onsite * b(l);
    if (l == 1)
      da += context.pump.f_a *
            std::exp(kI * (context.pump.phi_0a - context.pump.omega_pa * t));
    if (l == n)
      db += context.pump.f_b *
            std::exp(kI * (context.pump.phi_0b - context.pump.omega_pb * t));
    dx(2 * (l - 1)) = -kI * da;
    dx(2 * (l - 1) + 1) = -kI * db;
  }
  return dx;
}

Eigen::VectorXcd initial_amplitudes(InitialState init, int n_cells) {
  Eigen::VectorXcd x = Eigen::VectorXcd::Zero(2 * n_cells);
  switch (init) {
    case InitialState::Vacuum: break;
    case InitialState::BothEdges: x(0) = 1.0; x(2 * n_cells - 1) = 1.0; break;
    case InitialState::FirstEdge: x(0) = 1.0; break;
    case InitialState::LastEdge: x(2 * n_cells - 1) = 1.0; break;
  }
  return x;
}

Trajectory rk4_evolve(const Eigen::VectorXcd& x0, double t_end, double dt,
                      const EvolutionContext& context, double sample_stride) {
  context.params.validate();
  check_grid(context.schedule, t_end, dt, sample_stride);

  Trajectory traj;
  traj.context = context;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  int n = context.params.n_cells;
  long stride_steps = std::lround(sample_stride / dt);
  Eigen::VectorXcd x = x0;
  long step = 0;

  auto bounds = interval_bounds(context.schedule, t_end);
  for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    double t0 = bounds[seg], t1 = bounds[seg + 1];
    double alpha = context.schedule.alpha_at(0.5 * (t0 + t1));
    Eigen::MatrixXcd h =
        build_hamiltonian(hopping_amplitudes(alpha, context.params), context.params);
    long nsteps = std::lround((t1 - t0) / dt);
    auto deriv = [&](double t, const Eigen::VectorXcd& y) -> Eigen::VectorXcd {
      return -kI * (h * y + drive_vector(t, context.pump, n));
    };
    for (long s = 0; s < nsteps; ++s) {
      double t = step * dt;
      Eigen::VectorXcd k1 = deriv(t, x);
      Eigen::VectorXcd k2 = deriv(t + 0.5 * dt, x + 0.5 * dt * k1);
      Eigen::VectorXcd k3 = deriv(t + 0.5 * dt, x + 0.5 * dt * k2);
      Eigen::VectorXcd k4 = deriv(t + dt, x + dt * k3);
      x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ++step;
      if (step % stride_steps == 0) {
        traj.times.push_back(step * dt);
        traj.states.push_back(x);
      }
    }
  }
  return traj;
}

namespace {

struct Tone {
  Complex amp;    // F e^{i phi0} projected coefficient basis pending
  double omega;
  int site;
};

}  // namespace

Trajectory modal_evolve(const Eigen::VectorXcd& x0, double t_end,
                        const EvolutionContext& context, double sample_stride) {
  context.params.validate();
  const QuenchSchedule& sched = context.schedule;
  if (sample_stride <= 0.0)
    throw std::invalid_argument("sample_stride must be > 0");
  for (double t : {sched.t_a, sched.t_b, t_end})
    if (t > 0.0 && t <= t_end && !commensurate(t, sample_stride))
      throw std::invalid_argument(
          "sample_stride must be commensurate with the switch times");

  double gamma = context.params.gamma;
  int m = context.params.sites();

  std::vector<Tone> tones;
  if (context.pump.f_a != 0.0)
    tones.push_back({context.pump.f_a * std::exp(kI * context.pump.phi_0a),
                     context.pump.omega_pa, 0});
  if (context.pump.f_b != 0.0)
    tones.push_back({context.pump.f_b * std::exp(kI * context.pump.phi_0b),
                     context.pump.omega_pb, m - 1});

  Trajectory traj;
  traj.context = context;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);

  Eigen::VectorXcd x = x0;
  long sample = 0;

  auto bounds = interval_bounds(sched, t_end);
  for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    double t0 = bounds[seg], t1 = bounds[seg + 1];
    double alpha = sched.alpha_at(0.5 * (t0 + t1));
    EigenDecomposition d = decompose_lattice(context.params, alpha);
    const Eigen::VectorXd& lam = d.values;
    const Eigen::MatrixXd& v = d.vectors;

    Eigen::VectorXcd c0 = v.transpose() * x;

    // particular coefficients per tone; secular modes handled separately
    std::vector<Eigen::VectorXcd> part(tones.size());
    std::vector<Eigen::VectorXcd> gk(tones.size());
    std::vector<std::vector<int>> secular(tones.size());
    for (size_t ti = 0; ti < tones.size(); ++ti) {
      const Tone& tone = tones[ti];
      gk[ti] = tone.amp * v.row(tone.site).transpose().cast<Complex>();
      part[ti].setZero(m);
      for (int k = 0; k < m; ++k) {
        if (gamma == 0.0 && std::abs(lam(k) - tone.omega) < 1e-12) {
          secular[ti].push_back(k);
        } else {
          part[ti](k) = -gk[ti](k) / Complex(lam(k) - tone.omega, -gamma);
        }
      }
    }

    auto state_at = [&](double t) -> Eigen::VectorXcd {
      double tau = t - t0;
      Eigen::VectorXcd c(m);
      for (int k = 0; k < m; ++k) {
        Complex mu(lam(k), -gamma);
        Complex hom = c0(k);
        Complex forced{};
        for (size_t ti = 0; ti < tones.size(); ++ti) {
          hom -= part[ti](k) * std::exp(-kI * tones[ti].omega * t0);
          forced += part[ti](k) * std::exp(-kI * tones[ti].omega * t);
        }
        c(k) = std::exp(-kI * mu * tau) * hom + forced;
        for (size_t ti = 0; ti < tones.size(); ++ti)
          for (int ks : secular[ti])
            if (ks == k)
              c(k) += -kI * gk[ti](k) * tau * std::exp(-kI * tones[ti].omega * t);
      }
      return v * c;
    };

    while ((sample + 1) * sample_stride <= t1 + 1e-9) {
      ++sample;
      double t = sample * sample_stride;
      traj.times.push_back(t);
      traj.states.push_back(state_at(t));
    }
    x = state_at(t1);
  }
  return traj;
}

Trajectory run_protocol(const RunSpec& spec) {
  Eigen::VectorXcd x0 =
      initial_amplitudes(spec.init, spec.context.params.n_cells);
  switch (spec.solver) {
    case Solver::Rk4:
      return rk4_evolve(x0, spec.t_end, spec.dt, spec.context, spec.sample_stride);
    case Solver::Modal:
      return modal_evolve(x0, spec.t_end, spec.context, spec.sample_stride);
  }
  throw std::logic_error("unknown solver");
}

}  // namespace sshq
