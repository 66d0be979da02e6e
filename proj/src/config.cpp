#include "bivec/config.hpp"

#include <cctype>
#include <fstream>
#include <numbers>
#include <sstream>

namespace bivec {
namespace cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_string(ss.str(), path);
}

KeyValues KeyValues::parse_string(const std::string& text, const std::string& origin) {
  KeyValues kv;
  kv.origin_ = origin;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (kv.values_.count(key))
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                        key + "'");
    kv.values_[key] = value;
  }
  return kv;
}

std::string KeyValues::take(const std::string& key) {
  auto it = values_.find(key);
  if (it == values_.end())
    throw ConfigError(origin_ + ": missing required key '" + key + "'");
  std::string v = it->second;
  values_.erase(it);
  return v;
}

std::string KeyValues::get_string(const std::string& key) { return take(key); }

std::string KeyValues::get_string(const std::string& key, const std::string& fallback) {
  return has(key) ? take(key) : fallback;
}

double KeyValues::get_double(const std::string& key) {
  const std::string v = take(key);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" + v + "'");
  }
  if (used != v.size())
    throw ConfigError(origin_ + ": key '" + key + "' is not a number: '" + v + "'");
  return out;
}

double KeyValues::get_double(const std::string& key, double fallback) {
  return has(key) ? get_double(key) : fallback;
}

int KeyValues::get_int(const std::string& key) {
  const double v = get_double(key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError(origin_ + ": key '" + key + "' is not an integer");
  return i;
}

int KeyValues::get_int(const std::string& key, int fallback) {
  return has(key) ? get_int(key) : fallback;
}

void KeyValues::override_value(const std::string& key, const std::string& value) {
  values_[key] = value;
}

void KeyValues::finish() const {
  if (values_.empty()) return;
  std::string msg = origin_ + ": unknown key(s):";
  for (const auto& [k, v] : values_) msg += " '" + k + "'";
  throw ConfigError(msg);
}

namespace {

Handedness parse_handedness(const std::string& v, const char* key) {
  if (v == "right") return Handedness::right;
  if (v == "left") return Handedness::left;
  throw ConfigError(std::string(key) + " must be 'right' or 'left', got '" + v + "'");
}

}  // namespace

SimulateConfig SimulateConfig::from(KeyValues& kv) {
  SimulateConfig c;
  c.grid_n = kv.get_int("grid_n");
  c.grid_h = kv.get_double("grid_h");

  const std::string scheme = kv.get_string("scheme", "spectral");
  if (scheme == "spectral") {
    c.evolution.scheme = Scheme::spectral_exact;
  } else if (scheme == "rk4") {
    c.evolution.scheme = Scheme::rk4_fd;
  } else {
    throw ConfigError("scheme must be 'spectral' or 'rk4', got '" + scheme + "'");
  }
  c.evolution.dt = kv.get_double("dt");
  c.evolution.steps = kv.get_int("steps");
  c.evolution.fd_order = kv.get_int("fd_order", 2);
  c.evolution.cfl = kv.get_double("cfl", 0.5);

  const std::string init = kv.get_string("init", "plane_wave");
  if (init == "plane_wave") {
    c.init = InitKind::plane_wave;
  } else if (init == "dump") {
    c.init = InitKind::dump;
  } else if (init == "zero") {
    c.init = InitKind::zero;
  } else {
    throw ConfigError("init must be 'plane_wave', 'dump' or 'zero', got '" + init + "'");
  }
  c.wave_mx = kv.get_int("wave_mx", 0);
  c.wave_my = kv.get_int("wave_my", 0);
  c.wave_mz = kv.get_int("wave_mz", 1);
  c.wave_handedness =
      parse_handedness(kv.get_string("wave_handedness", "right"), "wave_handedness");
  c.wave_amplitude = kv.get_double("wave_amplitude", 1.0);
  c.dump_in = kv.get_string("dump_in", "");
  if (c.init == InitKind::dump && c.dump_in.empty())
    throw ConfigError("init = dump requires dump_in");
  if (c.init == InitKind::plane_wave && c.wave_mx == 0 && c.wave_my == 0 &&
      c.wave_mz == 0)
    throw ConfigError("plane-wave initial condition requires a nonzero lattice mode");

  const std::string source = kv.get_string("source", "none");
  if (source == "none") {
    c.source = SourceKind::none;
  } else if (source == "solenoidal_static") {
    c.source = SourceKind::solenoidal_static;
  } else if (source == "gaussian_pulse") {
    c.source = SourceKind::gaussian_pulse;
  } else {
    throw ConfigError(
        "source must be 'none', 'solenoidal_static' or 'gaussian_pulse', got '" +
        source + "'");
  }
  c.source_amplitude = kv.get_double("source_amplitude", 1.0);
  c.source_mode = kv.get_int("source_mode", 1);
  c.source_t0 = kv.get_double("source_t0", 1.0);
  c.source_tau = kv.get_double("source_tau", 0.25);
  if (c.source == SourceKind::gaussian_pulse && !(c.source_tau > 0.0))
    throw ConfigError("source_tau must be positive");

  c.out_dump = kv.get_string("out_dump", "final.rsbv");
  c.out_csv = kv.get_string("out_csv", "conservation.csv");
  c.dump_every = kv.get_int("dump_every", 0);
  if (c.dump_every < 0) throw ConfigError("dump_every must be >= 0");

  kv.finish();
  return c;
}

TransformConfig TransformConfig::from(KeyValues& kv) {
  TransformConfig c;
  c.params.xi = Vec3(kv.get_double("xi_x", 0.0), kv.get_double("xi_y", 0.0),
                     kv.get_double("xi_z", 0.0));
  c.params.alpha = Vec3(kv.get_double("alpha_x", 0.0), kv.get_double("alpha_y", 0.0),
                        kv.get_double("alpha_z", 0.0));
  if (!c.params.finite()) throw ConfigError("transformation parameters must be finite");

  const std::string input = kv.get_string("input", "plane_wave");
  if (input == "plane_wave") {
    c.input = InitKind::plane_wave;
  } else if (input == "dump") {
    c.input = InitKind::dump;
  } else {
    throw ConfigError("input must be 'plane_wave' or 'dump', got '" + input + "'");
  }
  c.dump_in = kv.get_string("dump_in", "");
  if (c.input == InitKind::dump && c.dump_in.empty())
    throw ConfigError("input = dump requires dump_in");

  c.wave_k = Vec3(kv.get_double("wave_kx", 0.0), kv.get_double("wave_ky", 0.0),
                  kv.get_double("wave_kz", 1.0));
  c.wave_handedness =
      parse_handedness(kv.get_string("wave_handedness", "right"), "wave_handedness");
  c.wave_amplitude = kv.get_double("wave_amplitude", 1.0);

  c.grid_n = kv.get_int("grid_n", 16);
  c.grid_h = kv.get_double("grid_h", 0.0);
  if (c.grid_h == 0.0) c.grid_h = 2.0 * std::numbers::pi / c.grid_n;
  c.probe_points = kv.get_int("probe_points", 20);
  if (c.probe_points < 1) throw ConfigError("probe_points must be >= 1");

  c.out_dump = kv.get_string("out_dump", "transformed.rsbv");

  kv.finish();
  return c;
}

}  // namespace cli
}  // namespace bivec
