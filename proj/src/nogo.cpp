#include "bivec/nogo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bivec/expm.hpp"
#include "bivec/generators.hpp"
#include "bivec/lorentz.hpp"
#include "bivec/rng.hpp"

namespace bivec {
namespace nogo {

namespace {

SmallRepBases build_small_reps() {
  SmallRepBases b;
  b.sigma[0] << 0, 1, 1, 0;
  b.sigma[1] << cplx(0), -iu, iu, cplx(0);
  b.sigma[2] << 1, 0, 0, -1;
  b.eps << 0, 1, -1, 0;

  const Mat2c id2 = Mat2c::Identity();
  b.gamma[0].setZero();
  b.gamma[0].block<2, 2>(0, 0) = id2;
  b.gamma[0].block<2, 2>(2, 2) = -id2;
  for (int k = 0; k < 3; ++k) {
    b.gamma[k + 1].setZero();
    b.gamma[k + 1].block<2, 2>(0, 2) = b.sigma[k];
    b.gamma[k + 1].block<2, 2>(2, 0) = -b.sigma[k];
  }
  return b;
}

}  // namespace

const SmallRepBases& small_rep_bases() {
  static const SmallRepBases bases = build_small_reps();
  return bases;
}

Mat4c SmallRepBases::spinor_generator(int mu, int nu) const {
  return (iu / 4.0) * commutator(gamma[mu], gamma[nu]);
}

double SmallRepBases::pauli_anticommutator_residual() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Mat2c anti = sigma[i] * sigma[j] + sigma[j] * sigma[i];
      const Mat2c expect = (i == j) ? (2.0 * Mat2c::Identity()).eval() : Mat2c::Zero().eval();
      worst = std::max(worst, (anti - expect).cwiseAbs().maxCoeff());
    }
  return worst;
}

double SmallRepBases::dirac_anticommutator_residual() const {
  const Mat4 g = minkowski_metric();
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4c anti = gamma[mu] * gamma[nu] + gamma[nu] * gamma[mu];
      worst = std::max(
          worst, (anti - 2.0 * g(mu, nu) * Mat4c::Identity()).cwiseAbs().maxCoeff());
    }
  return worst;
}

// ---- linear mass ansatz -------------------------------------------------

namespace {
constexpr double kSigmaTildeNormSq = 6.0;  // sum_k |SigmaTilde_k|_F^2
}

double linear_mass_residual(const Mat3c& s) {
  if (std::abs(s.determinant()) <= 1e-8)
    throw std::invalid_argument("linear ansatz requires a well-conditioned S");
  const GeneratorBasis& g = generators();
  const Mat3c t = s.inverse();
  double sum = 0.0;
  for (int k = 0; k < 3; ++k)
    sum += (s * g.SigmaTilde[k] * t + g.SigmaTilde[k]).squaredNorm();
  return sum / kSigmaTildeNormSq;
}

Mat3c linear_mass_gradient(const Mat3c& s) {
  const GeneratorBasis& g = generators();
  const Mat3c t = s.inverse();
  const Mat3c ta = t.adjoint();
  Mat3c grad = Mat3c::Zero();
  for (int k = 0; k < 3; ++k) {
    const Mat3c& m = g.SigmaTilde[k];  // Hermitian
    const Mat3c a = s * m * t + m;
    grad += a * ta * m - ta * m * s.adjoint() * a * ta;
  }
  return (2.0 / kSigmaTildeNormSq) * grad;
}

MinimizeResult minimize_linear_residual(int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  Rng rng(seed);
  MinimizeResult result;
  result.restarts = restarts;
  result.seed = seed;
  result.value = std::numeric_limits<double>::infinity();

  const auto normalized = [](const Mat3c& s) -> Mat3c {
    return s * (std::sqrt(3.0) / s.norm());
  };

  for (int r = 0; r < restarts; ++r) {
    Mat3c s = normalized(rng.gaussian_mat3c());
    while (std::abs(s.determinant()) < 1e-6) s = normalized(rng.gaussian_mat3c());

    double f = linear_mass_residual(s);
    double step = 0.2;
    int stall = 0;
    for (int it = 0; it < 400 && stall < 8; ++it) {
      const Mat3c grad = linear_mass_gradient(s);
      const double g2 = grad.squaredNorm();
      if (g2 < 1e-18) break;

      bool accepted = false;
      while (step > 1e-14) {
        const Mat3c cand = normalized(s - step * grad);
        if (std::abs(cand.determinant()) >= 1e-8) {
          const double fc = linear_mass_residual(cand);
          if (fc <= f - 1e-4 * step * g2) {
            stall = (f - fc < 1e-13) ? stall + 1 : 0;
            s = cand;
            f = fc;
            step = std::min(step * 1.5, 1.0);
            accepted = true;
            break;
          }
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }

    if (f < result.value) {
      result.value = f;
      result.best = s;
    }
  }
  return result;
}

std::vector<std::pair<Mat3c, double>> signed_permutation_residuals() {
  std::vector<std::pair<Mat3c, double>> out;
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Mat3c s = Mat3c::Zero();
      for (int row = 0; row < 3; ++row)
        s(row, perm[row]) = (signs >> row) & 1 ? -1.0 : 1.0;
      out.emplace_back(s, linear_mass_residual(s));
    }
  } while (std::next_permutation(perm, perm + 3));
  return out;
}

// ---- antilinear mass ansatz ---------------------------------------------

AntilinearReport antilinear_obstruction(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  Rng rng(seed);
  AntilinearReport rep;
  rep.samples = samples;
  rep.min_det = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const Mat3c st = rng.gaussian_mat3c();
    const cplx d = (st * st.conjugate()).determinant();
    rep.min_det = std::min(rep.min_det, d.real());
    rep.max_imag = std::max(rep.max_imag, std::abs(d.imag()));
  }
  return rep;
}

// ---- two-dimensional contrast -------------------------------------------

double pauli_contrast() {
  const SmallRepBases& b = small_rep_bases();
  const Mat2c eps_inv = b.eps.inverse();
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Mat2c lhs = b.eps * b.sigma[k].conjugate() * eps_inv;
    worst = std::max(worst, (lhs + b.sigma[k]).cwiseAbs().maxCoeff());
  }
  return worst;
}

double majorana_determinant_residual(double p0, const Vec3& p, double m, cplx eta) {
  const SmallRepBases& b = small_rep_bases();
  // sigma^mu p_mu = p0 - sigma.p ; sigmabar^mu p_mu = p0 + sigma.p
  Mat2c sp = p0 * Mat2c::Identity();
  Mat2c sbp = p0 * Mat2c::Identity();
  for (int k = 0; k < 3; ++k) {
    sp -= p(k) * b.sigma[k];
    sbp += p(k) * b.sigma[k];
  }
  const Mat2c elim = sbp * sp - (m * eta) * std::conj(m * eta) * Mat2c::Identity();
  return std::abs(elim.determinant());
}

double majorana_dispersion(const Vec3& p, double m, cplx eta) {
  if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
  const double p0 = std::sqrt(p.squaredNorm() + m * m);
  return majorana_determinant_residual(p0, p, m, eta);
}

// ---- gauge-potential attempt --------------------------------------------

std::pair<double, double> gauge_potential_failure(const AnalyticField& h,
                                                  const AlgebraParams& p,
                                                  int sample_points,
                                                  std::uint64_t seed) {
  const AnalyticField transformed = transform_analytic(p, h);
  Rng rng(seed);
  double before = 0.0;
  double after = 0.0;
  for (int i = 0; i < sample_points; ++i) {
    const double t = rng.uniform(-2.0, 2.0);
    const Vec3 x = rng.uniform_vec3(-2.0, 2.0);
    before = std::max(before, h.grad_divergence(t, x).norm());
    after = std::max(after, transformed.grad_divergence(t, x).norm());
  }
  return {before, after};
}

// ---- representation bookkeeping ------------------------------------------

std::vector<RepLabel> rep_product(const RepLabel& lhs, const RepLabel& rhs) {
  std::vector<RepLabel> out;
  for (int ta = std::abs(lhs.two_a - rhs.two_a); ta <= lhs.two_a + rhs.two_a; ta += 2)
    for (int tb = std::abs(lhs.two_b - rhs.two_b); tb <= lhs.two_b + rhs.two_b; tb += 2)
      out.push_back({ta, tb});
  std::sort(out.begin(), out.end(), [](const RepLabel& a, const RepLabel& b) {
    return a.dimension() > b.dimension();
  });
  return out;
}

DecompositionReport rep_dimension_decomposition() {
  DecompositionReport rep;
  rep.bivector_case = rep_product({1, 1}, {2, 0});
  rep.majorana_case = rep_product({1, 1}, {1, 0});
  for (const auto& t : rep.bivector_case) {
    rep.bivector_dims.push_back(t.dimension());
    if (t == RepLabel{2, 0} || t == RepLabel{0, 2}) rep.bivector_contains_self = true;
  }
  for (const auto& t : rep.majorana_case) {
    rep.majorana_dims.push_back(t.dimension());
    if (t == RepLabel{0, 1}) rep.majorana_contains_conjugate = true;
  }
  return rep;
}

// ---- covariance trichotomy ------------------------------------------------

Mat4c dirac_spinor_representative(const AlgebraParams& p) {
  const GeneratorBasis& g = generators();
  Mat4 x = Mat4::Zero();
  for (int l = 0; l < 3; ++l) x += p.xi(l) * g.L[l] + p.alpha(l) * g.S[l];
  const Mat4 omega = minkowski_metric() * x;  // omega_{mu nu}, antisymmetric

  const SmallRepBases& b = small_rep_bases();
  Mat4c arg = Mat4c::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      arg += (-iu / 2.0) * omega(mu, nu) * b.spinor_generator(mu, nu);
  return expm(arg);
}

double dirac_covariance_check(const AlgebraParams& p) {
  const Mat4 lambda = exp_lorentz(p).m;
  const Mat4c qd = dirac_spinor_representative(p);
  const Mat4c qd_inv = qd.inverse();
  const SmallRepBases& b = small_rep_bases();

  double worst = 0.0;
  for (int alpha = 0; alpha < 4; ++alpha) {
    Mat4c rhs = Mat4c::Zero();
    for (int nu = 0; nu < 4; ++nu) rhs += lambda(alpha, nu) * b.gamma[nu];
    worst = std::max(
        worst, (qd_inv * b.gamma[alpha] * qd - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

namespace {

enum class QVariant { inverse, transpose, conjugate };

double similarity_residual(const Mat4& lambda, const Mat3c& q, QVariant variant) {
  const GeneratorBasis& g = generators();
  Mat3c pre;
  switch (variant) {
    case QVariant::inverse: pre = q.inverse(); break;
    case QVariant::transpose: pre = q.transpose(); break;
    case QVariant::conjugate: pre = q.conjugate(); break;
  }
  double worst = 0.0;
  for (int alpha = 0; alpha < 4; ++alpha) {
    Mat3c rhs = Mat3c::Zero();
    for (int nu = 0; nu < 4; ++nu) rhs += lambda(alpha, nu) * g.Gamma[nu];
    worst = std::max(worst, (pre * g.Gamma[alpha] * q - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

BivectorCovarianceResult bivector_covariance_failure(const AlgebraParams& p) {
  const Correspondence rot = correspondence({Vec3::Zero(), p.alpha});
  const Correspondence full = correspondence(p);
  BivectorCovarianceResult r;
  r.rotation_residual = similarity_residual(rot.lambda.m, rot.q.q, QVariant::inverse);
  r.full_residual = similarity_residual(full.lambda.m, full.q.q, QVariant::inverse);
  r.transpose_variant = similarity_residual(full.lambda.m, full.q.q, QVariant::transpose);
  r.conjugate_variant = similarity_residual(full.lambda.m, full.q.q, QVariant::conjugate);
  return r;
}

double bispi_identity_check(const AlgebraParams& p) {
  const Correspondence c = correspondence(p);
  const Mat4& lam = c.lambda.m;
  const Mat3 spatial = lam.block<3, 3>(1, 1);
  if (std::abs(spatial.determinant()) < 1e-12)
    throw std::runtime_error("spatial block of Lambda is numerically singular");
  const Mat3c ltil = spatial.inverse().cast<cplx>();

  const Mat4 g = minkowski_metric();
  const Mat4 lam_lower = g * lam * g;  // Lambda_mu^nu at (mu, nu)

  const GeneratorBasis& gen = generators();
  Vec3c shift;  // Ltil^d_a Lambda^a_0
  for (int d = 0; d < 3; ++d) {
    shift(d) = 0.0;
    for (int a = 0; a < 3; ++a) shift(d) += ltil(d, a) * lam(a + 1, 0);
  }

  double worst = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    Mat3c t = Mat3c::Zero();
    for (int mu = 0; mu < 4; ++mu)
      t += lam_lower(mu, nu) * (ltil * gen.Gamma[mu] * c.q.q);
    if (nu >= 1) t.col(nu - 1) += shift;
    worst = std::max(worst, (gen.Gamma[nu] - t).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace nogo
}  // namespace bivec
