#include "stable_info/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "stable_info/errors.hpp"

namespace stable_info {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: '" + v + "'");
  }
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
  std::uint64_t x = 0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size()) throw ConfigError(key + ": not a nonnegative integer: '" + v + "'");
  return x;
}

// Shortest decimal form that reads back to the same double.
std::string fmt(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

void RunConfig::validate() const {
  if (n_points < (std::size_t{1} << 12) || (n_points & (n_points - 1)) != 0)
    throw ConfigError("grid.n_points must be a power of two >= 4096");
  if (!(extent_factor >= 50.0)) throw ConfigError("grid.extent_factor must be >= 50");
  if (!(tol_root > 0.0) || !(tol_entropy > 0.0) || !(tol_slack > 0.0)) throw ConfigError("tolerances must be positive");
  if (format != "csv" && format != "json") throw ConfigError("output.format must be csv or json");
}

GridOptions RunConfig::grid() const {
  GridOptions g;
  g.n_min = n_points;
  g.n_max = std::max(g.n_max, n_points);
  g.extent_factor = extent_factor;
  return g;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "grid.n_points")
    n_points = static_cast<std::size_t>(to_uint(key, value));
  else if (key == "grid.extent_factor")
    extent_factor = to_double(key, value);
  else if (key == "tol.root")
    tol_root = to_double(key, value);
  else if (key == "tol.entropy")
    tol_entropy = to_double(key, value);
  else if (key == "tol.slack")
    tol_slack = to_double(key, value);
  else if (key == "seed")
    seed = to_uint(key, value);
  else if (key == "output.format")
    format = value;
  else if (key == "output.path")
    path = value;
  else
    throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::load(std::istream& is, const std::string& origin) {
  std::string line;
  int no = 0;
  while (std::getline(is, line)) {
    ++no;
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(origin + ":" + std::to_string(no) + ": expected key = value");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::load_file(const std::string& p) {
  std::ifstream in(p);
  if (!in) throw ConfigError("cannot open config file '" + p + "'");
  load(in, p);
}

std::string RunConfig::show() const {
  std::ostringstream os;
  os << "grid.n_points = " << n_points << '\n'
     << "grid.extent_factor = " << fmt(extent_factor) << '\n'
     << "tol.root = " << fmt(tol_root) << '\n'
     << "tol.entropy = " << fmt(tol_entropy) << '\n'
     << "tol.slack = " << fmt(tol_slack) << '\n'
     << "seed = " << seed << '\n'
     << "output.format = " << format << '\n'
     << "output.path = " << path << '\n';
  return os.str();
}

}  // namespace stable_info
