#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "bivec/analytic.hpp"
#include "bivec/types.hpp"

namespace bivec {
namespace nogo {

/// Pauli and Dirac matrices (standard representation) plus the spinor
/// generators sigma^{mu nu} = (i/4)[gamma^mu, gamma^nu].
struct SmallRepBases {
  std::array<Mat2c, 3> sigma;
  Mat2c eps;  // ((0,1),(-1,0))
  std::array<Mat4c, 4> gamma;
  Mat4c spinor_generator(int mu, int nu) const;

  double pauli_anticommutator_residual() const;  // {sigma_i,sigma_j} - 2 delta_ij
  double dirac_anticommutator_residual() const;  // {gamma^mu,gamma^nu} - 2 g^munu
};

const SmallRepBases& small_rep_bases();

// ---- linear mass ansatz -------------------------------------------------

/// Normalized obstruction functional for S SigmaTilde_k S^{-1} = -SigmaTilde_k:
/// f(S) = sum_k |S St_k S^{-1} + St_k|_F^2 / sum_k |St_k|_F^2. Scale-free;
/// f(Id) = 4. Throws on |det S| <= 1e-8.
double linear_mass_residual(const Mat3c& s);

/// Wirtinger gradient of f (descent direction is its negative).
Mat3c linear_mass_gradient(const Mat3c& s);

struct MinimizeResult {
  Mat3c best = Mat3c::Identity();
  double value = 0.0;   // smallest residual found over all restarts
  int restarts = 0;
  std::uint64_t seed = 0;
};

/// Multi-start projected gradient descent from random complex Gaussian
/// matrices, renormalized to the Frobenius sphere after every step. The
/// impossibility result guarantees the infimum stays away from zero; this
/// returns the empirical floor.
MinimizeResult minimize_linear_residual(int restarts, std::uint64_t seed);

/// All 48 signed permutation matrices with their residuals (none is zero).
std::vector<std::pair<Mat3c, double>> signed_permutation_residuals();

// ---- antilinear mass ansatz ---------------------------------------------

struct AntilinearReport {
  double min_det = 0.0;        // min over samples of Re det(St St*)
  double max_imag = 0.0;       // max |Im det(St St*)|, mathematically zero
  double target = -1.0;        // det(-Id3), what the ansatz would require
  int samples = 0;
  bool unsatisfiable() const { return min_det > target; }
};

/// det(St St*) = |det St|^2 >= 0 for every St, while St St* = -Id3 would
/// need det -1: the antilinear ansatz has no solution.
AntilinearReport antilinear_obstruction(int samples, std::uint64_t seed);

// ---- two-dimensional contrast -------------------------------------------

/// Residual of eps sigma_k* eps^{-1} = -sigma_k (k = 1..3); exactly zero,
/// which is why the two-component construction admits a mass term.
double pauli_contrast();

/// |det| of the 2x2 operator obtained by eliminating Psi* from the
/// two-component massive equation at four-momentum (p0, p): zero exactly
/// on the mass shell p0^2 = |p|^2 + m^2, positive off shell.
double majorana_determinant_residual(double p0, const Vec3& p, double m, cplx eta);

/// The determinant residual evaluated at the on-shell energy.
double majorana_dispersion(const Vec3& p, double m, cplx eta);

// ---- gauge-potential attempt --------------------------------------------

/// Max norm of grad(div H) over sample points before and after the
/// bivector transformation of H. The constraint survives rotations but is
/// destroyed by boosts.
std::pair<double, double> gauge_potential_failure(const AnalyticField& h,
                                                  const AlgebraParams& p,
                                                  int sample_points = 16,
                                                  std::uint64_t seed = 1);

// ---- representation bookkeeping ------------------------------------------

/// (A,B) label stored as doubled spins, dimension (2A+1)(2B+1).
struct RepLabel {
  int two_a = 0;
  int two_b = 0;
  int dimension() const { return (two_a + 1) * (two_b + 1); }
  bool operator==(const RepLabel&) const = default;
};

std::vector<RepLabel> rep_product(const RepLabel& lhs, const RepLabel& rhs);

struct DecompositionReport {
  std::vector<RepLabel> bivector_case;  // (1/2,1/2) x (1,0)
  std::vector<RepLabel> majorana_case;  // (1/2,1/2) x (1/2,0)
  std::vector<int> bivector_dims;
  std::vector<int> majorana_dims;
  bool bivector_contains_self = false;  // (1,0) or (0,1) in the first product
  bool majorana_contains_conjugate = false;  // (0,1/2) in the second product
};

DecompositionReport rep_dimension_decomposition();

// ---- covariance trichotomy ------------------------------------------------

/// max_alpha | Q_D^{-1} gamma^alpha Q_D - Lambda^alpha_nu gamma^nu | with
/// Q_D the spinor representative of the same parameters; ~0 for all p.
double dirac_covariance_check(const AlgebraParams& p);

/// Spinor representative exp(-(i/2) omega_{mu nu} sigma^{mu nu}) with
/// omega matched so that the vector representative is exp_lorentz(p).
Mat4c dirac_spinor_representative(const AlgebraParams& p);

struct BivectorCovarianceResult {
  double rotation_residual;   // relation residual for the rotation part alone
  double full_residual;       // residual for the full parameters (Q^{-1} variant)
  double transpose_variant;   // Q^T in place of Q^{-1}
  double conjugate_variant;   // Q^* in place of Q^{-1}
};

/// No Dirac-style similarity relation holds for the bivector Gammas under
/// boosts; rotations alone satisfy it.
BivectorCovarianceResult bivector_covariance_failure(const AlgebraParams& p);

/// Residual of the mixed identity that replaces the similarity relation:
/// Gamma^nu_dc = Ltil^d_a Gamma^mu_ab Lam_mu^nu Q_bc + Ltil^d_a Lam^a_0 delta^nu_c.
/// Holds for every restricted Lorentz transformation. Throws if the
/// spatial block of Lambda is numerically singular.
double bispi_identity_check(const AlgebraParams& p);

}  // namespace nogo
}  // namespace bivec
