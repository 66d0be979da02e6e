#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bivec/types.hpp"

namespace bivec {

/// Deterministic random source. Doubles are derived from the raw 64-bit
/// stream directly (library distributions are implementation-defined), so
/// a seed pins the exact sample sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {  // Box-Muller
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  Vec3 uniform_vec3(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  Mat3c gaussian_mat3c() {
    Mat3c m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = cplx(gaussian(), gaussian());
    return m;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bivec
