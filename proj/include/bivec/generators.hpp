#pragma once

#include <array>

#include "bivec/types.hpp"

namespace bivec {

// Totally antisymmetric symbol with eps(0,1,2) = +1 (0-based axis labels).
constexpr int levi_civita(int l, int m, int n) {
  if (l == m || m == n || n == l) return 0;
  return ((m - l + 3) % 3 == 1) ? +1 : -1;
}

/// The fixed generator matrices of so(1,3) and so(3,C) together with the
/// Gamma matrices of the first-order bivector equation. All entries lie in
/// {0, +-1, +-i}; the basis is built once and never mutated.
struct GeneratorBasis {
  std::array<Mat4, 3> S;            // rotation generators, spatial block (S_l)_mn = eps_lmn
  std::array<Mat4, 3> L;            // boost generators, -1 in the 0-k block
  std::array<Mat3c, 3> Sigma;       // (Sigma_l)_mn = eps_lmn, real antisymmetric
  std::array<Mat3c, 3> SigmaTilde;  // i * Sigma_l, imaginary antisymmetric
  std::array<Mat3c, 4> Gamma;       // Gamma^0 = Id3, Gamma^k = -SigmaTilde_k
  std::array<Mat3c, 4> GammaBar;    // GammaBar^0 = Id3, GammaBar^k = +SigmaTilde_k
};

const GeneratorBasis& generators();

template <typename MatA, typename MatB>
auto commutator(const MatA& a, const MatB& b) {
  return (a * b - b * a).eval();
}

/// Maximum entrywise residual of each commutation-relation family. The
/// paper basis satisfies every relation exactly (integer and imaginary
/// integer entries), so all residuals are expected to be 0.0.
struct StructureReport {
  double rot_rot;      // [S_l,S_m] = -eps_lmn S_n
  double boost_boost;  // [L_l,L_m] = +eps_lmn S_n
  double boost_rot;    // [L_l,S_m] = -eps_lmn L_n
  double sig_sig;      // [Sigma_l,Sigma_m] = -eps_lmn Sigma_n
  double sigt_sigt;    // [SigmaTilde_l,SigmaTilde_m] = +eps_lmn Sigma_n
  double sigt_sig;     // [SigmaTilde_l,Sigma_m] = -eps_lmn SigmaTilde_n

  double max() const;
  // The identification S_l <-> Sigma_l, L_l <-> SigmaTilde_l is validated
  // when both triples satisfy the same relations.
  bool identification_holds(double tol = 0.0) const;
};

StructureReport check_structure_constants(const GeneratorBasis& basis);

}  // namespace bivec
