#ifndef SSHQ_CONFIG_HPP
#define SSHQ_CONFIG_HPP

#include <string>
#include <vector>

namespace sshq {

enum class Command {
  None,
  Spectrum,
  Hoppings,
  Evolve,
  Eigenstate,
  Sd,
  SdDynamics,
  Sweep,
};

/// Fully resolved run configuration. Angles are stored in units of pi,
/// times in units of the drive period T_p = 2*pi/pump.omega.
struct RunConfig {
  Command command = Command::None;

  int n_cells = 20;
  double epsilon = 1.0;
  double gamma = 0.0025;
  double v0 = 0.125;
  double mu_k2 = 0.25;

  double alpha_t = 0.75;  // units of pi
  double alpha_g = 0.5;
  double t_a = 10.0;      // units of T_p
  double t_b = 30.0;
  double t_end = 40.0;
  double dt = 1.0 / 256.0;
  double sample_stride = 1.0 / 16.0;

  double pump_fa = 0.01;
  double pump_fb = 0.01;
  double pump_omega = 1.0;
  double pump_phi0 = 0.0;

  std::string init = "vacuum";  // vacuum|both_edges|first_edge|last_edge
  std::string solver = "modal"; // modal|rk4
  std::string out_dir = "out";

  double alpha = 0.75;          // units of pi, single-alpha commands
  double alpha_min = 0.0;
  double alpha_max = 1.0;
  int alpha_steps = 201;
  std::string states = "20,21";  // 1-based state indices for eigenstate dumps
  std::string sweep_gammas = "0,0.0005,0.0025,0.005,0.0075";
  int threads = 0;               // 0 = library default

  bool operator==(const RunConfig&) const = default;
};

/// Parses a '#'-commented key=value document. Unknown keys, bad numbers and
/// malformed lines raise std::runtime_error naming the offending line.
RunConfig parse_config(const std::string& text);

/// One "key=value" override, same key set and diagnostics as parse_config.
void apply_override(RunConfig& config, const std::string& assignment);

std::string serialize(const RunConfig& config);

Command command_from_name(const std::string& name);
std::string command_name(Command command);

std::vector<double> parse_number_list(const std::string& text);

}  // namespace sshq

#endif
