#include "sshq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sshq {

namespace {

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out = open_out(path, false);
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size())
      throw std::invalid_argument("csv row width does not match header");
    for (size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_number(row[i]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void render_heatmap(const OccupationField& field,
                    const std::filesystem::path& path) {
  int width = static_cast<int>(field.site_pop.rows());   // time samples
  int height = static_cast<int>(field.site_pop.cols());  // sites
  double peak = field.site_pop.size() ? field.site_pop.maxCoeff() : 0.0;

  std::ofstream out = open_out(path, true);
  out << "P5\n" << width << " " << height << "\n255\n";
  for (int site = 0; site < height; ++site) {
    for (int i = 0; i < width; ++i) {
      double v = peak > 0.0 ? field.site_pop(i, site) / peak : 0.0;
      auto byte = static_cast<unsigned char>(std::lround(255.0 * v));
      out.put(static_cast<char>(byte));
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());

  std::filesystem::path sidecar = path;
  sidecar += ".max.txt";
  std::ofstream side = open_out(sidecar, false);
  side << format_number(peak) << "\n";
}

}  // namespace sshq
