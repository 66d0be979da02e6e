#include "bivec/lorentz.hpp"

#include <cmath>

#include "bivec/bivector.hpp"
#include "bivec/expm.hpp"
#include "bivec/generators.hpp"

namespace bivec {

Mat4 minkowski_metric() {
  Mat4 g = Mat4::Zero();
  g.diagonal() << 1.0, -1.0, -1.0, -1.0;
  return g;
}

double LorentzMatrix::metric_residual() const {
  const Mat4 g = minkowski_metric();
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

double LorentzMatrix::det_residual() const { return std::abs(m.determinant() - 1.0); }

double ComplexRotation::orthogonality_residual() const {
  return (q.transpose() * q - Mat3c::Identity()).cwiseAbs().maxCoeff();
}

double ComplexRotation::det_residual() const { return std::abs(q.determinant() - 1.0); }

Mat3 skew(const Vec3& w) {
  Mat3 m;
  m << 0.0, -w(2), w(1), w(2), 0.0, -w(0), -w(1), w(0), 0.0;
  return m;
}

Mat3c skew(const Vec3c& w) {
  Mat3c m;
  m << cplx(0.0), -w(2), w(1), w(2), cplx(0.0), -w(0), -w(1), w(0), cplx(0.0);
  return m;
}

Mat3 exp_so3(const Vec3& w) {
  const double theta = w.norm();
  if (theta < 1e-12) {
    const Mat3 k = skew(w);
    return Mat3::Identity() + k + 0.5 * k * k;
  }
  const Vec3 axis = w / theta;
  const Mat3 k = skew(axis);
  return Mat3::Identity() + std::sin(theta) * k + (1.0 - std::cos(theta)) * k * k;
}

namespace {

// sin(theta)/theta and (1 - cos(theta))/theta^2 as entire functions of
// t = theta^2, so the branch of the complex square root never matters.
void sinc_coeffs(cplx t, cplx& c1, cplx& c2) {
  if (std::abs(t) < 1e-4) {
    c1 = 1.0 - t / 6.0 + t * t / 120.0 - t * t * t / 5040.0;
    c2 = 0.5 - t / 24.0 + t * t / 720.0 - t * t * t / 40320.0;
    return;
  }
  const cplx theta = std::sqrt(t);
  c1 = std::sin(theta) / theta;
  c2 = (1.0 - std::cos(theta)) / t;
}

}  // namespace

Mat3c exp_so3_complex(const Vec3c& w) {
  const cplx t = bilinear_dot(w, w);
  cplx c1, c2;
  sinc_coeffs(t, c1, c2);
  const Mat3c k = skew(w);
  return Mat3c::Identity() + c1 * k + c2 * k * k;
}

LorentzMatrix exp_lorentz(const AlgebraParams& p) {
  const double xin = p.xi.norm();
  const double an = p.alpha.norm();

  Mat4 m = Mat4::Identity();
  if (xin == 0.0 && an == 0.0) return {m};

  if (xin == 0.0) {
    // Pure rotation: alpha.S acts as skew(-alpha) on the spatial block.
    m.block<3, 3>(1, 1) = exp_so3(-p.alpha);
    return {m};
  }
  if (an == 0.0) {
    // Pure boost: B = xi.L satisfies B^3 = xi^2 B.
    const GeneratorBasis& g = generators();
    Mat4 b = Mat4::Zero();
    for (int l = 0; l < 3; ++l) b += p.xi(l) * g.L[l];
    m += (std::sinh(xin) / xin) * b + ((std::cosh(xin) - 1.0) / (xin * xin)) * b * b;
    return {m};
  }

  const GeneratorBasis& g = generators();
  Mat4 x = Mat4::Zero();
  for (int l = 0; l < 3; ++l) x += p.xi(l) * g.L[l] + p.alpha(l) * g.S[l];
  return {expm(x)};
}

ComplexRotation exp_complex_rotation(const AlgebraParams& p) {
  // xi.SigmaTilde + alpha.Sigma = skew(-(alpha + i xi))
  const Vec3c w = -(p.alpha.cast<cplx>() + iu * p.xi.cast<cplx>());
  return {exp_so3_complex(w)};
}

Correspondence correspondence(const AlgebraParams& p) {
  return {exp_lorentz(p), exp_complex_rotation(p)};
}

Mat4 faraday_from_eb(const Vec3& e, const Vec3& b) {
  Mat4 f = Mat4::Zero();
  for (int i = 0; i < 3; ++i) {
    f(i + 1, 0) = e(i);
    f(0, i + 1) = -e(i);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) f(i + 1, j + 1) -= levi_civita(i, j, k) * b(k);
  }
  return f;
}

std::pair<Vec3, Vec3> eb_from_faraday(const Mat4& f) {
  Vec3 e, b;
  for (int i = 0; i < 3; ++i) e(i) = f(i + 1, 0);
  b(0) = -f(2, 3);
  b(1) = -f(3, 1);
  b(2) = -f(1, 2);
  return {e, b};
}

std::pair<Vec3, Vec3> transform_eb(const LorentzMatrix& lambda, const Vec3& e,
                                   const Vec3& b) {
  const Mat4 f = faraday_from_eb(e, b);
  const Mat4 fp = lambda.m * f * lambda.m.transpose();
  return eb_from_faraday(fp);
}

double faraday_tensor_roundtrip(const AlgebraParams& p, const Vec3& e, const Vec3& b) {
  const Correspondence c = correspondence(p);
  const auto [ep, bp] = transform_eb(c.lambda, e, b);
  return (c.q.q * from_eb(e, b) - from_eb(ep, bp)).norm();
}

}  // namespace bivec
