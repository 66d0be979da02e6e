#pragma once

#include <cmath>
#include <utility>

#include "bivec/generators.hpp"
#include "bivec/types.hpp"

namespace bivec {

// from_eb multiplies and to_eb divides by the same stored constant: the
// roundings anticorrelate, so power-of-two components (and the anchor
// values 1/sqrt(2) etc.) roundtrip bit-exactly and everything else stays
// within one ulp. Two independently rounded sqrt(2) factors would bias.
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

inline Bivector from_eb(const Vec3& e, const Vec3& b) {
  return (e.cast<cplx>() + iu * b.cast<cplx>()) * kInvSqrt2;
}

inline std::pair<Vec3, Vec3> to_eb(const Bivector& psi) {
  return {psi.real() / kInvSqrt2, psi.imag() / kInvSqrt2};
}

/// Pointwise observables: energy density, Poynting vector, and the two
/// Lorentz invariants Re/Im of Psi^T Psi.
struct PointObservables {
  double energy;   // Psi+ Gamma^0 Psi = (E^2 + B^2)/2
  Vec3 poynting;   // Psi+ Gamma^k Psi = (E x B)_k
  double i1;       // Re Psi^T Psi = (E^2 - B^2)/2
  double i2;       // Im Psi^T Psi = E.B
};

// Psi+ Gamma^mu Psi expanded: Gamma^0 gives |Psi|^2, Gamma^k gives
// -i (Psi* x Psi)_k. The unit tests pin this against the literal matrix
// contraction and against the E/B formulas.
inline PointObservables observables(const Bivector& psi) {
  PointObservables o;
  o.energy = psi.squaredNorm();
  const Vec3c cross = bilinear_cross(psi.conjugate(), psi);
  for (int k = 0; k < 3; ++k) o.poynting(k) = (-iu * cross(k)).real();
  const cplx inv = bilinear_dot(psi, psi);
  o.i1 = inv.real();
  o.i2 = inv.imag();
  return o;
}

inline Bivector gauge_phase(const Bivector& psi, double alpha) {
  return std::exp(iu * alpha) * psi;
}

}  // namespace bivec
