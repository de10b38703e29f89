#include "oparax/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "oparax/errors.hpp"

namespace oparax {

Grid1D RunConfig::make_ygrid() const {
  return Grid1D(ny, y0, ly / static_cast<double>(ny));
}

Grid1D RunConfig::make_xgrid() const {
  return Grid1D(nx, 0.0, lx / static_cast<double>(nx));
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Entry {
  std::string value;
  int line = 0;
};

class KeyBag {
 public:
  explicit KeyBag(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      if (const auto hash = raw.find('#'); hash != std::string::npos)
        raw.erase(hash);
      const std::string stripped = trim(raw);
      if (stripped.empty()) continue;
      const auto eq = stripped.find('=');
      if (eq == std::string::npos)
        fail(errc::type_error, "config line " + std::to_string(line) +
                                   ": expected `key = value`");
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value = trim(stripped.substr(eq + 1));
      if (key.empty() || value.empty())
        fail(errc::type_error, "config line " + std::to_string(line) +
                                   ": empty key or value");
      if (entries_.count(key))
        fail(errc::type_error, "config line " + std::to_string(line) +
                                   ": duplicate key `" + key + "`");
      entries_[key] = Entry{value, line};
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string take_string(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end())
      fail(errc::missing_key, "config: required key `" + key + "` is absent");
    std::string v = it->second.value;
    entries_.erase(it);
    return v;
  }

  double take_double(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end())
      fail(errc::missing_key, "config: required key `" + key + "` is absent");
    const Entry e = it->second;
    entries_.erase(it);
    double out = 0.0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
      fail(errc::type_error, "config line " + std::to_string(e.line) + ": `" +
                                 key + "` is not a number");
    return out;
  }

  std::size_t take_size(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end())
      fail(errc::missing_key, "config: required key `" + key + "` is absent");
    const Entry e = it->second;
    entries_.erase(it);
    std::size_t out = 0;
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last)
      fail(errc::type_error, "config line " + std::to_string(e.line) + ": `" +
                                 key + "` is not a nonnegative integer");
    return out;
  }

  double take_double_or(const std::string& key, double fallback) {
    return has(key) ? take_double(key) : fallback;
  }

  bool take_bool_or(const std::string& key, bool fallback) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return fallback;
    const Entry e = it->second;
    entries_.erase(it);
    if (e.value == "true" || e.value == "1") return true;
    if (e.value == "false" || e.value == "0") return false;
    fail(errc::type_error, "config line " + std::to_string(e.line) + ": `" +
                               key + "` is not a boolean (true/false/1/0)");
  }

  void expect_empty() const {
    if (entries_.empty()) return;
    const auto& [key, e] = *entries_.begin();
    fail(errc::unknown_key, "config line " + std::to_string(e.line) +
                                ": unknown key `" + key + "`");
  }

 private:
  std::map<std::string, Entry> entries_;
};

}  // namespace

RunConfig parse_config(const std::string& text) {
  KeyBag bag(text);
  RunConfig cfg;

  const double eps = bag.take_double("params.epsilon");
  const double nu = bag.take_double("params.nu");
  const bool has_theta = bag.has("params.theta");
  const bool has_kx = bag.has("params.kx");
  const bool has_ky = bag.has("params.ky");
  if (has_theta && (has_kx || has_ky))
    fail(errc::type_error,
         "config: params.theta conflicts with params.kx/params.ky");
  if (has_kx != has_ky)
    fail(errc::missing_key,
         "config: params.kx and params.ky must be given together");
  if (has_theta) {
    cfg.params = PhysicalParams::from_angle(eps, bag.take_double("params.theta"),
                                            nu);
  } else if (has_kx) {
    cfg.params = PhysicalParams::from_direction(
        eps, bag.take_double("params.kx"), bag.take_double("params.ky"), nu);
  } else {
    fail(errc::missing_key,
         "config: give either params.theta or params.kx/params.ky");
  }

  cfg.ny = bag.take_size("grids.ny");
  cfg.ly = bag.take_double("grids.ly");
  cfg.y0 = bag.take_double("grids.y0");
  cfg.nx = bag.take_size("grids.nx");
  cfg.lx = bag.take_double("grids.lx");

  const std::string shape = bag.take_string("boundary.shape");
  if (shape == "gaussian") {
    cfg.shape = RunConfig::Shape::gaussian;
    cfg.center = bag.take_double("boundary.center");
    cfg.width = bag.take_double("boundary.width");
    if (!(cfg.width > 0.0))
      fail(errc::invalid_argument, "config: boundary.width must be positive");
  } else if (shape == "file") {
    cfg.shape = RunConfig::Shape::file;
    cfg.boundary_path = bag.take_string("boundary.path");
  } else {
    fail(errc::type_error,
         "config: boundary.shape must be `gaussian` or `file`");
  }
  cfg.amplitude = bag.take_double_or("boundary.amplitude", 1.0);
  cfg.shift_A = bag.take_double_or("boundary.shift_A", 0.0);

  if (bag.has("outputs.field_path"))
    cfg.field_path = bag.take_string("outputs.field_path");
  if (bag.has("outputs.csv_path"))
    cfg.csv_path = bag.take_string("outputs.csv_path");

  cfg.diag_energy = bag.take_bool_or("diagnostics.energy", true);
  cfg.diag_stability = bag.take_bool_or("diagnostics.stability", true);
  cfg.diag_transparency = bag.take_bool_or("diagnostics.transparency", true);
  cfg.diag_absorbing = bag.take_bool_or("diagnostics.absorbing", true);
  cfg.diag_paraxiality = bag.take_bool_or("diagnostics.paraxiality", true);
  cfg.diag_hardy = bag.take_bool_or("diagnostics.hardy", true);
  cfg.diag_weighted = bag.take_bool_or("diagnostics.weighted", true);

  if (bag.has("run.threads")) {
    const std::size_t t = bag.take_size("run.threads");
    if (t < 1)
      fail(errc::invalid_argument, "config: run.threads must be >= 1");
    cfg.threads = static_cast<unsigned>(t);
  }

  bag.expect_empty();

  // Fail here, not at first use, when the grids are malformed.
  (void)cfg.make_ygrid();
  (void)cfg.make_xgrid();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open config file `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace oparax
