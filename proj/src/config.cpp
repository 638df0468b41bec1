#include "sshq/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sshq {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key, int line) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line) +
                             ": unparsable number for key '" + key + "': " + v);
  }
}

int parse_int(const std::string& v, const std::string& key, int line) {
  double d = parse_double(v, key, line);
  int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw std::runtime_error("line " + std::to_string(line) +
                             ": expected integer for key '" + key + "': " + v);
  return i;
}

using Setter = std::function<void(RunConfig&, const std::string&, int)>;

const std::map<std::string, Setter>& key_table() {
  static const std::map<std::string, Setter> table = {
      {"command", [](RunConfig& c, const std::string& v, int ln) {
         try {
           c.command = command_from_name(v);
         } catch (const std::exception&) {
           throw std::runtime_error("line " + std::to_string(ln) +
                                    ": unknown command '" + v + "'");
         }
       }},
      {"n_cells", [](RunConfig& c, const std::string& v, int ln) { c.n_cells = parse_int(v, "n_cells", ln); }},
      {"epsilon", [](RunConfig& c, const std::string& v, int ln) { c.epsilon = parse_double(v, "epsilon", ln); }},
      {"gamma", [](RunConfig& c, const std::string& v, int ln) { c.gamma = parse_double(v, "gamma", ln); }},
      {"v0", [](RunConfig& c, const std::string& v, int ln) { c.v0 = parse_double(v, "v0", ln); }},
      {"mu_k2", [](RunConfig& c, const std::string& v, int ln) { c.mu_k2 = parse_double(v, "mu_k2", ln); }},
      {"alpha_t", [](RunConfig& c, const std::string& v, int ln) { c.alpha_t = parse_double(v, "alpha_t", ln); }},
      {"alpha_g", [](RunConfig& c, const std::string& v, int ln) { c.alpha_g = parse_double(v, "alpha_g", ln); }},
      {"t_a", [](RunConfig& c, const std::string& v, int ln) { c.t_a = parse_double(v, "t_a", ln); }},
      {"t_b", [](RunConfig& c, const std::string& v, int ln) { c.t_b = parse_double(v, "t_b", ln); }},
      {"t_end", [](RunConfig& c, const std::string& v, int ln) { c.t_end = parse_double(v, "t_end", ln); }},
      {"dt", [](RunConfig& c, const std::string& v, int ln) { c.dt = parse_double(v, "dt", ln); }},
      {"sample_stride", [](RunConfig& c, const std::string& v, int ln) { c.sample_stride = parse_double(v, "sample_stride", ln); }},
      {"pump.fa", [](RunConfig& c, const std::string& v, int ln) { c.pump_fa = parse_double(v, "pump.fa", ln); }},
      {"pump.fb", [](RunConfig& c, const std::string& v, int ln) { c.pump_fb = parse_double(v, "pump.fb", ln); }},
      {"pump.omega", [](RunConfig& c, const std::string& v, int ln) { c.pump_omega = parse_double(v, "pump.omega", ln); }},
      {"pump.phi0", [](RunConfig& c, const std::string& v, int ln) { c.pump_phi0 = parse_double(v, "pump.phi0", ln); }},
      {"init", [](RunConfig& c, const std::string& v, int) { c.init = v; }},
      {"solver", [](RunConfig& c, const std::string& v, int) { c.solver = v; }},
      {"out_dir", [](RunConfig& c, const std::string& v, int) { c.out_dir = v; }},
      {"alpha", [](RunConfig& c, const std::string& v, int ln) { c.alpha = parse_double(v, "alpha", ln); }},
      {"alpha_min", [](RunConfig& c, const std::string& v, int ln) { c.alpha_min = parse_double(v, "alpha_min", ln); }},
      {"alpha_max", [](RunConfig& c, const std::string& v, int ln) { c.alpha_max = parse_double(v, "alpha_max", ln); }},
      {"alpha_steps", [](RunConfig& c, const std::string& v, int ln) { c.alpha_steps = parse_int(v, "alpha_steps", ln); }},
      {"states", [](RunConfig& c, const std::string& v, int) { c.states = v; }},
      {"sweep_gammas", [](RunConfig& c, const std::string& v, int) { c.sweep_gammas = v; }},
      {"threads", [](RunConfig& c, const std::string& v, int ln) { c.threads = parse_int(v, "threads", ln); }},
  };
  return table;
}

void apply_line(RunConfig& config, const std::string& raw, int line) {
  std::string s = raw;
  size_t hash = s.find('#');
  if (hash != std::string::npos) s = s.substr(0, hash);
  s = trim(s);
  if (s.empty()) return;
  size_t eq = s.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("line " + std::to_string(line) +
                             ": expected key=value, got '" + trim(raw) + "'");
  std::string key = trim(s.substr(0, eq));
  std::string value = trim(s.substr(eq + 1));
  auto it = key_table().find(key);
  if (it == key_table().end())
    throw std::runtime_error("line " + std::to_string(line) +
                             ": unknown key '" + key + "'");
  it->second(config, value, line);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) apply_line(config, line, ++lineno);
  return config;
}

void apply_override(RunConfig& config, const std::string& assignment) {
  apply_line(config, assignment, 1);
}

std::string serialize(const RunConfig& c) {
  std::ostringstream out;
  if (c.command != Command::None) out << "command=" << command_name(c.command) << "\n";
  out << "n_cells=" << c.n_cells << "\n";
  out << "epsilon=" << fmt(c.epsilon) << "\n";
  out << "gamma=" << fmt(c.gamma) << "\n";
  out << "v0=" << fmt(c.v0) << "\n";
  out << "mu_k2=" << fmt(c.mu_k2) << "\n";
  out << "alpha_t=" << fmt(c.alpha_t) << "\n";
  out << "alpha_g=" << fmt(c.alpha_g) << "\n";
  out << "t_a=" << fmt(c.t_a) << "\n";
  out << "t_b=" << fmt(c.t_b) << "\n";
  out << "t_end=" << fmt(c.t_end) << "\n";
  out << "dt=" << fmt(c.dt) << "\n";
  out << "sample_stride=" << fmt(c.sample_stride) << "\n";
  out << "pump.fa=" << fmt(c.pump_fa) << "\n";
  out << "pump.fb=" << fmt(c.pump_fb) << "\n";
  out << "pump.omega=" << fmt(c.pump_omega) << "\n";
  out << "pump.phi0=" << fmt(c.pump_phi0) << "\n";
  out << "init=" << c.init << "\n";
  out << "solver=" << c.solver << "\n";
  out << "out_dir=" << c.out_dir << "\n";
  out << "alpha=" << fmt(c.alpha) << "\n";
  out << "alpha_min=" << fmt(c.alpha_min) << "\n";
  out << "alpha_max=" << fmt(c.alpha_max) << "\n";
  out << "alpha_steps=" << c.alpha_steps << "\n";
  out << "states=" << c.states << "\n";
  out << "sweep_gammas=" << c.sweep_gammas << "\n";
  out << "threads=" << c.threads << "\n";
  return out.str();
}

Command command_from_name(const std::string& name) {
  if (name == "spectrum") return Command::Spectrum;
  if (name == "hoppings") return Command::Hoppings;
  if (name == "evolve") return Command::Evolve;
  if (name == "eigenstate") return Command::Eigenstate;
  if (name == "sd") return Command::Sd;
  if (name == "sd-dynamics") return Command::SdDynamics;
  if (name == "sweep") return Command::Sweep;
  throw std::runtime_error("unknown command '" + name + "'");
}

std::string command_name(Command command) {
  switch (command) {
    case Command::Spectrum: return "spectrum";
    case Command::Hoppings: return "hoppings";
    case Command::Evolve: return "evolve";
    case Command::Eigenstate: return "eigenstate";
    case Command::Sd: return "sd";
    case Command::SdDynamics: return "sd-dynamics";
    case Command::Sweep: return "sweep";
    case Command::None: break;
  }
  return "none";
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw std::runtime_error("empty entry in number list: '" + text + "'");
    out.push_back(parse_double(item, "list", 1));
  }
  return out;
}

}  // namespace sshq
