#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "stable_info/density.hpp"

namespace stable_info {

// Numeric and output settings shared by every CLI command.
struct RunConfig {
  std::size_t n_points = std::size_t{1} << 16;  // minimum grid size; grids grow when the law needs it
  double extent_factor = 200.0;
  double tol_root = 1e-6;
  double tol_entropy = 1e-3;
  double tol_slack = 1e-3;
  std::uint64_t seed = 1;
  std::string format = "csv";  // csv | json
  std::string path;            // empty: standard output

  /// Throws ConfigError.
  void validate() const;
  GridOptions grid() const;

  /// Set one key (grid.n_points, grid.extent_factor, tol.root, tol.entropy,
  /// tol.slack, seed, output.format, output.path). Throws ConfigError.
  void set(const std::string& key, const std::string& value);

  /// Read flat key = value lines; '#' starts a comment.
  void load(std::istream& is, const std::string& origin = "config");
  void load_file(const std::string& path);

  /// Every key with its current value, one per line, in load() syntax.
  std::string show() const;
};

}  // namespace stable_info
