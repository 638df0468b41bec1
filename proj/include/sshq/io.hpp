#ifndef SSHQ_IO_HPP
#define SSHQ_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sshq/observables.hpp"

namespace sshq {

/// Comma-separated table with a header row, every number rendered with 17
/// significant digits, trailing newline.
void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

/// Binary 8-bit PGM (P5): rows are sites 1..2N top to bottom, columns are
/// time samples; values scaled linearly by the field maximum, which is
/// written to a ".max.txt" sidecar.
void render_heatmap(const OccupationField& field,
                    const std::filesystem::path& path);

std::string format_number(double v);

}  // namespace sshq

#endif
