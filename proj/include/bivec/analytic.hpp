#pragma once

#include <functional>
#include <vector>

#include "bivec/lorentz.hpp"
#include "bivec/types.hpp"

namespace bivec {

enum class Handedness { right, left };

/// Circularly polarized plane wave: wavevector k, handedness, and the
/// normalization N (the dispersion fixes k0 = |k|).
struct PlaneWaveSpec {
  Vec3 k;
  Handedness handedness = Handedness::right;
  double amplitude = 1.0;

  void validate() const;  // throws std::invalid_argument on k = 0 or N <= 0
};

/// One complex plane-wave mode a e^{i(k.x - omega t)}. omega is signed;
/// left-handed waves carry omega = -|k|.
struct PlaneWaveMode {
  Vec3c amplitude;
  Vec3 k;
  double omega;
};

/// Finite superposition of plane-wave modes. Derivatives are algebraic,
/// so transformed fields stay exactly differentiable.
class AnalyticField {
 public:
  AnalyticField() = default;
  explicit AnalyticField(std::vector<PlaneWaveMode> modes) : modes_(std::move(modes)) {}

  static AnalyticField plane_wave(const PlaneWaveSpec& spec);

  void add_mode(const PlaneWaveMode& m) { modes_.push_back(m); }
  const std::vector<PlaneWaveMode>& modes() const { return modes_; }

  Bivector operator()(double t, const Vec3& x) const;
  Bivector time_derivative(double t, const Vec3& x) const;
  Bivector curl(double t, const Vec3& x) const;
  cplx divergence(double t, const Vec3& x) const;
  Vec3c grad_divergence(double t, const Vec3& x) const;  // grad(div Psi)

  /// Residual of the vacuum equation d_t Psi + i curl Psi at one point.
  double vacuum_residual(double t, const Vec3& x) const;

 private:
  std::vector<PlaneWaveMode> modes_;
};

/// Minimal rotation taking e3 to khat (axis e3 x khat); khat = -e3 is
/// resolved by a half-turn about e1.
Mat3 frame_rotation(const Vec3& khat);

/// Value of plane_wave(spec) at the space-time point x = (x0, x1, x2, x3).
Bivector plane_wave(const PlaneWaveSpec& spec, const Vec4& x);

/// x' -> Q field(Lambda^{-1} x') with (Lambda, Q) = correspondence(p),
/// evaluated exactly on the mode representation.
AnalyticField transform_analytic(const AlgebraParams& p, const AnalyticField& field);

/// Same transformation for an arbitrary point map.
std::function<Bivector(double, const Vec3&)> transform_point_map(
    const AlgebraParams& p, std::function<Bivector(double, const Vec3&)> field);

AnalyticField gauge_phase(const AnalyticField& field, double alpha);

}  // namespace bivec
