#include <doctest.h>

#include <cmath>

#include "bivec/bivector.hpp"
#include "bivec/lorentz.hpp"
#include "support/oracles.hpp"

using namespace bivec;

TEST_CASE("single-axis boost has the textbook closed form") {
  for (double xi1 : {0.1, 1.0, 2.0}) {
    const LorentzMatrix lam = exp_lorentz({Vec3(xi1, 0, 0), Vec3::Zero()});
    Mat4 expect = Mat4::Identity();
    expect(0, 0) = expect(1, 1) = std::cosh(xi1);
    expect(0, 1) = expect(1, 0) = -std::sinh(xi1);
    CHECK((lam.m - expect).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(lam.valid(1e-12));
  }
}

TEST_CASE("identity parameters give the identity in both representations") {
  const Correspondence c = correspondence({});
  CHECK((c.lambda.m - Mat4::Identity()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((c.q.q - Mat3c::Identity()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("group membership invariants over random parameters") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const AlgebraParams p = oracle::random_params(rng, 2.0, 2.0);
    const Correspondence c = correspondence(p);
    CHECK(c.lambda.metric_residual() <= 1e-12);
    CHECK(c.lambda.det_residual() <= 1e-12);
    CHECK(c.lambda.orthochronous());
    CHECK(c.q.orthogonality_residual() <= 1e-12);
    CHECK(c.q.det_residual() <= 1e-12);
  }
}

TEST_CASE("mixed boost-rotation exponential agrees with the series oracle") {
  const GeneratorBasis& g = generators();
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const AlgebraParams p = oracle::random_params(rng, 2.0, 2.0);
    Mat4 x = Mat4::Zero();
    for (int l = 0; l < 3; ++l) x += p.xi(l) * g.L[l] + p.alpha(l) * g.S[l];
    const Mat4 expect = oracle::expm_series(x);
    CHECK((exp_lorentz(p).m - expect).cwiseAbs().maxCoeff() <= 1e-12);
  }
  // the spec'd example point
  const AlgebraParams p{Vec3(0.3, 0.4, 0.0), Vec3(0.0, 0.0, 1.1)};
  Mat4 x = Mat4::Zero();
  for (int l = 0; l < 3; ++l) x += p.xi(l) * g.L[l] + p.alpha(l) * g.S[l];
  CHECK((exp_lorentz(p).m - oracle::expm_series(x)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(exp_lorentz(p).valid(1e-12));
}

TEST_CASE("complex rotation exponential: boost and rotation closed forms") {
  const double xi1 = 0.8;
  const Mat3c qb = exp_complex_rotation({Vec3(xi1, 0, 0), Vec3::Zero()}).q;
  Mat3c expect = Mat3c::Identity();
  expect(1, 1) = expect(2, 2) = std::cosh(xi1);
  expect(1, 2) = iu * std::sinh(xi1);
  expect(2, 1) = -iu * std::sinh(xi1);
  CHECK((qb - expect).cwiseAbs().maxCoeff() <= 1e-12);

  const double a1 = 0.6;
  const Mat3c qr = exp_complex_rotation({Vec3::Zero(), Vec3(a1, 0, 0)}).q;
  Mat3c rot = Mat3c::Identity();
  rot(1, 1) = rot(2, 2) = std::cos(a1);
  rot(1, 2) = std::sin(a1);
  rot(2, 1) = -std::sin(a1);
  CHECK((qr - rot).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(qr.imag().cwiseAbs().maxCoeff() <= 1e-15);

  // agreement with the series oracle on mixed parameters
  const GeneratorBasis& g = generators();
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const AlgebraParams p = oracle::random_params(rng, 2.0, 2.0);
    Mat3c x = Mat3c::Zero();
    for (int l = 0; l < 3; ++l)
      x += p.xi(l) * g.SigmaTilde[l] + p.alpha(l) * g.Sigma[l];
    CHECK((exp_complex_rotation(p).q - oracle::expm_series(x)).cwiseAbs().maxCoeff() <=
          1e-12);
  }
}

TEST_CASE("null complex rotation parameters (w.w = 0) stay finite and orthogonal") {
  // alpha and xi orthogonal with equal norms make w = -(alpha + i xi) null.
  const AlgebraParams p{Vec3(0.0, 0.7, 0.0), Vec3(0.7, 0.0, 0.0)};
  const ComplexRotation q = exp_complex_rotation(p);
  CHECK(q.valid(1e-12));
  const GeneratorBasis& g = generators();
  Mat3c x = Mat3c::Zero();
  for (int l = 0; l < 3; ++l) x += p.xi(l) * g.SigmaTilde[l] + p.alpha(l) * g.Sigma[l];
  CHECK((q.q - oracle::expm_series(x)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("correspondence(p) and correspondence(-p) are inverse pairs") {
  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    const AlgebraParams p = oracle::random_params(rng, 2.0, 2.0);
    const Correspondence a = correspondence(p);
    const Correspondence b = correspondence(-p);
    CHECK((a.lambda.m * b.lambda.m - Mat4::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((a.q.q * b.q.q - Mat3c::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("for pure rotations Q is real and equals the spatial block of Lambda") {
  Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const AlgebraParams p{Vec3::Zero(), rng.uniform_vec3(-2.0, 2.0)};
    const Correspondence c = correspondence(p);
    CHECK(c.q.q.imag().cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((c.q.q.real() - c.lambda.m.block<3, 3>(1, 1)).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("boost of a transverse electric field matches the textbook table") {
  const double xi1 = 0.9;
  const double gamma = std::cosh(xi1);
  const double beta = std::tanh(xi1);
  const double e2 = 1.3;
  const AlgebraParams p{Vec3(xi1, 0, 0), Vec3::Zero()};

  const auto [ep, bp] = transform_eb(exp_lorentz(p), Vec3(0, e2, 0), Vec3::Zero());
  CHECK(ep(1) == doctest::Approx(gamma * e2).epsilon(1e-13));
  CHECK(bp(2) == doctest::Approx(-gamma * beta * e2).epsilon(1e-13));
  CHECK(faraday_tensor_roundtrip(p, Vec3(0, e2, 0), Vec3::Zero()) <= 1e-12);
}

TEST_CASE("x1-boost field table reproduced entry by entry") {
  Rng rng(17);
  for (double beta : {0.2, 0.5, 0.9}) {
    const double xi1 = std::atanh(beta);
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    const Vec3 e = rng.uniform_vec3(-1.0, 1.0);
    const Vec3 b = rng.uniform_vec3(-1.0, 1.0);
    const auto [ep, bp] =
        transform_eb(exp_lorentz({Vec3(xi1, 0, 0), Vec3::Zero()}), e, b);
    CHECK(std::abs(ep(0) - e(0)) <= 1e-12);
    CHECK(std::abs(bp(0) - b(0)) <= 1e-12);
    CHECK(std::abs(ep(1) - gamma * (e(1) - beta * b(2))) <= 1e-12);
    CHECK(std::abs(bp(1) - gamma * (b(1) + beta * e(2))) <= 1e-12);
    CHECK(std::abs(ep(2) - gamma * (e(2) + beta * b(1))) <= 1e-12);
    CHECK(std::abs(bp(2) - gamma * (b(2) - beta * e(1))) <= 1e-12);
  }
}

TEST_CASE("roundtrip residual vanishes for the identity and stays tiny for random p") {
  Rng rng(23);
  CHECK(faraday_tensor_roundtrip({}, Vec3(0.3, -0.2, 0.9), Vec3(1.0, 0.5, -0.1)) ==
        0.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const AlgebraParams p = oracle::random_params(rng, 2.0, 2.0);
    const Vec3 e = rng.uniform_vec3(-1.0, 1.0);
    const Vec3 b = rng.uniform_vec3(-1.0, 1.0);
    worst = std::max(worst, faraday_tensor_roundtrip(p, e, b));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("words of exponentials stay consistent across the representations") {
  Rng rng(29);
  for (int i = 0; i < 20; ++i) {
    const AlgebraParams p1 = oracle::random_params(rng, 1.0, 1.0);
    const AlgebraParams p2 = oracle::random_params(rng, 1.0, 1.0);
    const Correspondence c1 = correspondence(p1);
    const Correspondence c2 = correspondence(p2);
    const LorentzMatrix word_lam{c1.lambda.m * c2.lambda.m};
    const Mat3c word_q = c1.q.q * c2.q.q;

    const Vec3 e = rng.uniform_vec3(-1.0, 1.0);
    const Vec3 b = rng.uniform_vec3(-1.0, 1.0);
    const auto [ep, bp] = transform_eb(word_lam, e, b);
    CHECK((word_q * from_eb(e, b) - from_eb(ep, bp)).norm() <= 1e-10);
  }
}
