#include "bivec/generators.hpp"

#include <algorithm>

namespace bivec {

namespace {

GeneratorBasis build_basis() {
  GeneratorBasis g;

  for (int l = 0; l < 3; ++l) {
    g.Sigma[l].setZero();
    g.SigmaTilde[l].setZero();
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        const int e = levi_civita(l, m, n);
        if (e == 0) continue;
        g.Sigma[l](m, n) = static_cast<double>(e);
        g.SigmaTilde[l](m, n) = iu * static_cast<double>(e);
      }
    }
  }

  for (int l = 0; l < 3; ++l) {
    g.S[l].setZero();
    g.L[l].setZero();
    // S_l acts on the spatial block exactly like Sigma_l.
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        g.S[l](m + 1, n + 1) = static_cast<double>(levi_civita(l, m, n));
    g.L[l](0, l + 1) = -1.0;
    g.L[l](l + 1, 0) = -1.0;
  }

  g.Gamma[0] = Mat3c::Identity();
  g.GammaBar[0] = Mat3c::Identity();
  for (int k = 0; k < 3; ++k) {
    g.Gamma[k + 1] = -g.SigmaTilde[k];
    g.GammaBar[k + 1] = g.SigmaTilde[k];
  }
  return g;
}

template <typename Mat>
double family_residual(const std::array<Mat, 3>& a, const std::array<Mat, 3>& b,
                       const std::array<Mat, 3>& target, double sign) {
  double worst = 0.0;
  for (int l = 0; l < 3; ++l) {
    for (int m = 0; m < 3; ++m) {
      Mat rhs = Mat::Zero();
      for (int n = 0; n < 3; ++n) rhs += sign * levi_civita(l, m, n) * target[n];
      worst = std::max(worst, (commutator(a[l], b[m]) - rhs).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace

const GeneratorBasis& generators() {
  static const GeneratorBasis basis = build_basis();
  return basis;
}

double StructureReport::max() const {
  return std::max({rot_rot, boost_boost, boost_rot, sig_sig, sigt_sigt, sigt_sig});
}

bool StructureReport::identification_holds(double tol) const {
  return rot_rot <= tol && boost_boost <= tol && boost_rot <= tol &&
         sig_sig <= tol && sigt_sigt <= tol && sigt_sig <= tol;
}

StructureReport check_structure_constants(const GeneratorBasis& basis) {
  StructureReport r{};
  r.rot_rot = family_residual(basis.S, basis.S, basis.S, -1.0);
  r.boost_boost = family_residual(basis.L, basis.L, basis.S, +1.0);
  r.boost_rot = family_residual(basis.L, basis.S, basis.L, -1.0);
  r.sig_sig = family_residual(basis.Sigma, basis.Sigma, basis.Sigma, -1.0);
  r.sigt_sigt = family_residual(basis.SigmaTilde, basis.SigmaTilde, basis.Sigma, +1.0);
  r.sigt_sig = family_residual(basis.SigmaTilde, basis.Sigma, basis.SigmaTilde, -1.0);
  return r;
}

}  // namespace bivec
