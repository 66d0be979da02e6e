#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "bivec/analytic.hpp"
#include "bivec/evolution.hpp"

namespace bivec {
namespace cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` configuration ('#' starts a comment). Typed getters
/// consume keys; finish() rejects anything left over, so unknown keys are
/// always an error.
class KeyValues {
 public:
  static KeyValues parse_file(const std::string& path);
  static KeyValues parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  std::string get_string(const std::string& key);
  std::string get_string(const std::string& key, const std::string& fallback);
  double get_double(const std::string& key);
  double get_double(const std::string& key, double fallback);
  int get_int(const std::string& key);
  int get_int(const std::string& key, int fallback);

  void override_value(const std::string& key, const std::string& value);
  void finish() const;  // throws ConfigError listing unconsumed keys

 private:
  std::string take(const std::string& key);
  std::map<std::string, std::string> values_;
  std::string origin_;
};

enum class InitKind { plane_wave, dump, zero };
enum class SourceKind { none, solenoidal_static, gaussian_pulse };

struct SimulateConfig {
  int grid_n = 0;
  double grid_h = 0.0;
  EvolutionConfig evolution;

  InitKind init = InitKind::plane_wave;
  int wave_mx = 0, wave_my = 0, wave_mz = 1;  // integer lattice mode numbers
  Handedness wave_handedness = Handedness::right;
  double wave_amplitude = 1.0;
  std::string dump_in;

  SourceKind source = SourceKind::none;
  double source_amplitude = 1.0;
  int source_mode = 1;
  double source_t0 = 1.0;
  double source_tau = 0.25;

  std::string out_dump = "final.rsbv";
  std::string out_csv = "conservation.csv";
  int dump_every = 0;  // 0: final only

  static SimulateConfig from(KeyValues& kv);
};

struct TransformConfig {
  AlgebraParams params;

  InitKind input = InitKind::plane_wave;  // plane_wave or dump
  std::string dump_in;
  Vec3 wave_k = Vec3(0.0, 0.0, 1.0);  // physical wavevector for analytic input
  Handedness wave_handedness = Handedness::right;
  double wave_amplitude = 1.0;
  int grid_n = 16;       // sampling grid for analytic output
  double grid_h = 0.0;   // 0: 2 pi / grid_n
  int probe_points = 20;

  std::string out_dump = "transformed.rsbv";

  static TransformConfig from(KeyValues& kv);
};

}  // namespace cli
}  // namespace bivec
