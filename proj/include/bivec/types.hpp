#pragma once

#include <Eigen/Dense>
#include <complex>

namespace bivec {

using cplx = std::complex<double>;

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec3c = Eigen::Vector3cd;
using Mat2c = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3d;
using Mat3c = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4d;
using Mat4c = Eigen::Matrix4cd;

// Value of the Riemann-Silberstein field at a point, (E + iB)/sqrt(2).
using Bivector = Vec3c;

inline constexpr cplx iu{0.0, 1.0};

/// Boost rapidities xi and rotation angles alpha of one group element,
/// entering exp(xi.L + alpha.S) and exp(xi.SigmaTilde + alpha.Sigma).
struct AlgebraParams {
  Vec3 xi = Vec3::Zero();
  Vec3 alpha = Vec3::Zero();

  AlgebraParams() = default;
  AlgebraParams(const Vec3& xi_, const Vec3& alpha_) : xi(xi_), alpha(alpha_) {}

  AlgebraParams operator-() const { return {-xi, -alpha}; }
  bool finite() const { return xi.allFinite() && alpha.allFinite(); }
};

// Unconjugated dot product w.w (Eigen's dot() conjugates the left factor).
inline cplx bilinear_dot(const Vec3c& a, const Vec3c& b) {
  return a(0) * b(0) + a(1) * b(1) + a(2) * b(2);
}

// Plain componentwise cross product (Eigen's cross() conjugates the result
// of a complex cross product).
inline Vec3c bilinear_cross(const Vec3c& a, const Vec3c& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
          a(0) * b(1) - a(1) * b(0)};
}

}  // namespace bivec
