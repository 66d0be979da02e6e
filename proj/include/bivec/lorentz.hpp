#pragma once

#include <utility>

#include "bivec/types.hpp"

namespace bivec {

Mat4 minkowski_metric();  // diag(1,-1,-1,-1)

/// Element of the restricted Lorentz group SO+(1,3).
struct LorentzMatrix {
  Mat4 m;

  double metric_residual() const;  // max entry of |m^T g m - g|
  double det_residual() const;     // |det m - 1|
  bool orthochronous() const { return m(0, 0) >= 1.0 - 1e-12; }
  bool valid(double tol = 1e-12) const {
    return metric_residual() <= tol && det_residual() <= tol && orthochronous();
  }
};

/// Element of SO(3,C): Q^T Q = Id (plain transpose), det Q = 1.
struct ComplexRotation {
  Mat3c q;

  double orthogonality_residual() const;  // max entry of |q^T q - Id|
  double det_residual() const;            // |det q - 1|
  bool valid(double tol = 1e-12) const {
    return orthogonality_residual() <= tol && det_residual() <= tol;
  }
};

// skew(w) = [w x], i.e. skew(w) v = w x v; complex entries allowed.
Mat3 skew(const Vec3& w);
Mat3c skew(const Vec3c& w);

/// Rodrigues form of exp(skew(w)) for real w.
Mat3 exp_so3(const Vec3& w);

/// Holomorphic Rodrigues form of exp(skew(w)) for complex w. Handles the
/// null case w.w = 0 (where the exponential truncates) through the series
/// branch of the sinc coefficients.
Mat3c exp_so3_complex(const Vec3c& w);

/// Lambda = exp(xi.L + alpha.S). Closed form for pure rotations and pure
/// boosts; scaling-and-squaring for the mixed case.
LorentzMatrix exp_lorentz(const AlgebraParams& p);

/// Q = exp(xi.SigmaTilde + alpha.Sigma), closed form for every parameter
/// (the generator combination is skew(-(alpha + i xi))).
ComplexRotation exp_complex_rotation(const AlgebraParams& p);

/// The pair (Lambda, Q) representing one abstract group element.
struct Correspondence {
  LorentzMatrix lambda;
  ComplexRotation q;
};

Correspondence correspondence(const AlgebraParams& p);

// Antisymmetric field-strength tensor with F^{i0} = E_i, F^{ij} = -eps_ijk B_k.
Mat4 faraday_from_eb(const Vec3& e, const Vec3& b);
std::pair<Vec3, Vec3> eb_from_faraday(const Mat4& f);

/// Tensor-route transformation of the field: F' = Lambda F Lambda^T.
std::pair<Vec3, Vec3> transform_eb(const LorentzMatrix& lambda, const Vec3& e,
                                   const Vec3& b);

/// || Q Psi(E,B) - Psi(E',B') || where (E',B') comes from the tensor route.
/// Ground truth that Q implements the Lorentz action on the bivector.
double faraday_tensor_roundtrip(const AlgebraParams& p, const Vec3& e, const Vec3& b);

}  // namespace bivec
