#ifndef SSHQ_COMMANDS_HPP
#define SSHQ_COMMANDS_HPP

#include "sshq/config.hpp"
#include "sshq/dynamics.hpp"

namespace sshq {

/// Conversions from the file-facing config (angles in units of pi, times in
/// units of T_p) to the module types (radians, physical time).
LatticeParams lattice_from(const RunConfig& config);
QuenchSchedule schedule_from(const RunConfig& config);
PumpConfig pump_from(const RunConfig& config);
RunSpec runspec_from(const RunConfig& config);

/// Executes config.command, writing its output files under config.out_dir.
void run_command(const RunConfig& config);

}  // namespace sshq

#endif
