#include "bivec/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace bivec {

void PlaneWaveSpec::validate() const {
  if (k.norm() == 0.0) throw std::invalid_argument("plane wave requires k != 0");
  if (!(amplitude > 0.0)) throw std::invalid_argument("plane wave requires N > 0");
  if (!k.allFinite()) throw std::invalid_argument("plane wave requires finite k");
}

Mat3 frame_rotation(const Vec3& khat) {
  const Vec3 e3 = Vec3::UnitZ();
  const double c = e3.dot(khat);
  const Vec3 axis = e3.cross(khat);
  const double s = axis.norm();
  if (s == 0.0) {
    if (c > 0.0) return Mat3::Identity();
    return exp_so3(M_PI * Vec3::UnitX());  // khat = -e3 tie-break
  }
  return exp_so3(std::atan2(s, c) * (axis / s));
}

AnalyticField AnalyticField::plane_wave(const PlaneWaveSpec& spec) {
  spec.validate();
  const double k0 = spec.k.norm();
  const Mat3 r = frame_rotation(spec.k / k0);
  const Vec3c eps1 = r.col(0).cast<cplx>();
  const Vec3c eps2 = r.col(1).cast<cplx>();

  PlaneWaveMode m;
  m.k = spec.k;
  if (spec.handedness == Handedness::right) {
    m.amplitude = spec.amplitude * (eps1 + iu * eps2);
    m.omega = k0;
  } else {
    m.amplitude = spec.amplitude * (eps1 - iu * eps2);
    m.omega = -k0;
  }
  return AnalyticField({m});
}

Bivector AnalyticField::operator()(double t, const Vec3& x) const {
  Bivector v = Bivector::Zero();
  for (const auto& m : modes_) v += m.amplitude * std::exp(iu * (m.k.dot(x) - m.omega * t));
  return v;
}

Bivector AnalyticField::time_derivative(double t, const Vec3& x) const {
  Bivector v = Bivector::Zero();
  for (const auto& m : modes_)
    v += (-iu * m.omega) * m.amplitude * std::exp(iu * (m.k.dot(x) - m.omega * t));
  return v;
}

Bivector AnalyticField::curl(double t, const Vec3& x) const {
  Bivector v = Bivector::Zero();
  for (const auto& m : modes_) {
    const Vec3c ik = iu * m.k.cast<cplx>();
    v += bilinear_cross(ik, m.amplitude) * std::exp(iu * (m.k.dot(x) - m.omega * t));
  }
  return v;
}

cplx AnalyticField::divergence(double t, const Vec3& x) const {
  cplx v = 0.0;
  for (const auto& m : modes_)
    v += iu * bilinear_dot(m.k.cast<cplx>(), m.amplitude) *
         std::exp(iu * (m.k.dot(x) - m.omega * t));
  return v;
}

Vec3c AnalyticField::grad_divergence(double t, const Vec3& x) const {
  Vec3c v = Vec3c::Zero();
  for (const auto& m : modes_) {
    const cplx ka = bilinear_dot(m.k.cast<cplx>(), m.amplitude);
    v += -ka * m.k.cast<cplx>() * std::exp(iu * (m.k.dot(x) - m.omega * t));
  }
  return v;
}

double AnalyticField::vacuum_residual(double t, const Vec3& x) const {
  return (time_derivative(t, x) + iu * curl(t, x)).norm();
}

Bivector plane_wave(const PlaneWaveSpec& spec, const Vec4& x) {
  return AnalyticField::plane_wave(spec)(x(0), x.tail<3>());
}

AnalyticField transform_analytic(const AlgebraParams& p, const AnalyticField& field) {
  const Correspondence c = correspondence(p);
  std::vector<PlaneWaveMode> out;
  out.reserve(field.modes().size());
  for (const auto& m : field.modes()) {
    Vec4 k4;
    k4 << m.omega, m.k(0), m.k(1), m.k(2);
    const Vec4 kp = c.lambda.m * k4;
    PlaneWaveMode t;
    t.amplitude = c.q.q * m.amplitude;
    t.omega = kp(0);
    t.k = kp.tail<3>();
    out.push_back(t);
  }
  return AnalyticField(std::move(out));
}

std::function<Bivector(double, const Vec3&)> transform_point_map(
    const AlgebraParams& p, std::function<Bivector(double, const Vec3&)> field) {
  const Correspondence c = correspondence(p);
  const Mat4 lam_inv = c.lambda.m.inverse();
  const Mat3c q = c.q.q;
  return [lam_inv, q, f = std::move(field)](double t, const Vec3& x) -> Bivector {
    Vec4 xp;
    xp << t, x(0), x(1), x(2);
    const Vec4 y = lam_inv * xp;
    return q * f(y(0), y.tail<3>());
  };
}

AnalyticField gauge_phase(const AnalyticField& field, double alpha) {
  std::vector<PlaneWaveMode> out = field.modes();
  const cplx phase = std::exp(iu * alpha);
  for (auto& m : out) m.amplitude *= phase;
  return AnalyticField(std::move(out));
}

}  // namespace bivec
