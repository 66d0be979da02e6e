#include <doctest.h>

#include <cmath>

#include "bivec/analytic.hpp"
#include "bivec/bivector.hpp"
#include "support/oracles.hpp"

using namespace bivec;

TEST_CASE("from_eb anchor values") {
  const Bivector a = from_eb(Vec3(1, 0, 0), Vec3::Zero());
  CHECK(a(0) == cplx(kInvSqrt2, 0.0));
  CHECK(a(1) == cplx(0.0));
  CHECK(a(2) == cplx(0.0));

  const Bivector b = from_eb(Vec3::Zero(), Vec3(0, 1, 0));
  CHECK(b(1) == cplx(0.0, kInvSqrt2));
  CHECK(b(0) == cplx(0.0));
}

TEST_CASE("to_eb inverts from_eb") {
  Rng rng(31);
  // Power-of-two components roundtrip bit-exactly.
  for (int i = 0; i < 100; ++i) {
    Vec3 e, b;
    for (int c = 0; c < 3; ++c) {
      e(c) = std::ldexp(rng.uniform() < 0.5 ? -1.0 : 1.0,
                        static_cast<int>(rng.uniform(-8.0, 9.0)));
      b(c) = std::ldexp(rng.uniform() < 0.5 ? -1.0 : 1.0,
                        static_cast<int>(rng.uniform(-8.0, 9.0)));
    }
    const auto [er, br] = to_eb(from_eb(e, b));
    CHECK(er == e);
    CHECK(br == b);
  }
  // Arbitrary components roundtrip within one ulp.
  for (int i = 0; i < 100; ++i) {
    const Vec3 e = rng.uniform_vec3(-10.0, 10.0);
    const Vec3 b = rng.uniform_vec3(-10.0, 10.0);
    const auto [er, br] = to_eb(from_eb(e, b));
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(er(c) - e(c)) <= std::abs(e(c)) * 3e-16);
      CHECK(std::abs(br(c) - b(c)) <= std::abs(b(c)) * 3e-16);
    }
  }
}

TEST_CASE("observables against direct E/B arithmetic") {
  // hand-evaluated anchor
  const PointObservables o = observables(from_eb(Vec3(1, 0, 0), Vec3(0, 1, 0)));
  CHECK(o.energy == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(o.poynting(0) == doctest::Approx(0.0));
  CHECK(o.poynting(1) == doctest::Approx(0.0));
  CHECK(o.poynting(2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(o.i1 == doctest::Approx(0.0));
  CHECK(o.i2 == doctest::Approx(0.0));

  const PointObservables zero = observables(Bivector::Zero());
  CHECK(zero.energy == 0.0);
  CHECK(zero.poynting.norm() == 0.0);
  CHECK(zero.i1 == 0.0);
  CHECK(zero.i2 == 0.0);

  // oracle: (E^2+B^2)/2, E x B, (E^2-B^2)/2, E.B on random fields
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const Vec3 e = rng.uniform_vec3(-2.0, 2.0);
    const Vec3 b = rng.uniform_vec3(-2.0, 2.0);
    const PointObservables obs = observables(from_eb(e, b));
    CHECK(obs.energy ==
          doctest::Approx(0.5 * (e.squaredNorm() + b.squaredNorm())).epsilon(1e-13));
    CHECK((obs.poynting - e.cross(b)).norm() <= 1e-13 * (1.0 + e.norm() * b.norm()));
    CHECK(obs.i1 ==
          doctest::Approx(0.5 * (e.squaredNorm() - b.squaredNorm())).epsilon(1e-13));
    CHECK(obs.i2 == doctest::Approx(e.dot(b)).epsilon(1e-13));
    CHECK(obs.energy >= 0.0);
  }
}

TEST_CASE("observables equal the literal Gamma-matrix contraction") {
  const GeneratorBasis& g = generators();
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    Bivector psi;
    for (int c = 0; c < 3; ++c) psi(c) = cplx(rng.gaussian(), rng.gaussian());
    const PointObservables o = observables(psi);
    CHECK(o.energy ==
          doctest::Approx((psi.adjoint() * g.Gamma[0] * psi).value().real())
              .epsilon(1e-13));
    for (int k = 0; k < 3; ++k)
      CHECK(o.poynting(k) ==
            doctest::Approx((psi.adjoint() * g.Gamma[k + 1] * psi).value().real())
                .epsilon(1e-13));
  }
}

TEST_CASE("energy vanishes only for the zero field") {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const Vec3 e = rng.uniform_vec3(-1.0, 1.0);
    const Vec3 b = rng.uniform_vec3(-1.0, 1.0);
    if (e.norm() + b.norm() == 0.0) continue;
    CHECK(observables(from_eb(e, b)).energy > 0.0);
  }
}

TEST_CASE("right-handed plane wave along +x3") {
  PlaneWaveSpec spec;
  spec.k = Vec3(0, 0, 2.0);
  const AnalyticField w = AnalyticField::plane_wave(spec);
  REQUIRE(w.modes().size() == 1);
  const PlaneWaveMode& m = w.modes()[0];
  CHECK((m.amplitude - Vec3c(1.0, iu, 0.0)).norm() <= 1e-15);
  CHECK(m.omega == doctest::Approx(2.0));

  // explicit value N (1, i, 0) e^{i k3 x3 - i k0 x0}
  Vec4 x;
  x << 0.3, 0.1, -0.4, 0.7;
  const cplx phase = std::exp(iu * (2.0 * x(3) - 2.0 * x(0)));
  const Bivector expect = Vec3c(1.0, iu, 0.0) * phase;
  CHECK((plane_wave(spec, x) - expect).norm() <= 1e-14);

  // energy density of the unit-amplitude wave is 2 everywhere
  CHECK(observables(plane_wave(spec, x)).energy == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("right-handed wave moving in -x3 has polarization (1,-i,0)") {
  PlaneWaveSpec spec;
  spec.k = Vec3(0, 0, -1.5);
  const PlaneWaveMode& m = AnalyticField::plane_wave(spec).modes()[0];
  CHECK((m.amplitude - Vec3c(1.0, -iu, 0.0)).norm() <= 1e-15);
  CHECK(m.omega == doctest::Approx(1.5));
}

TEST_CASE("left-handed wave carries the opposite time frequency") {
  PlaneWaveSpec spec;
  spec.k = Vec3(0, 0, 1.0);
  spec.handedness = Handedness::left;
  const PlaneWaveMode& m = AnalyticField::plane_wave(spec).modes()[0];
  CHECK((m.amplitude - Vec3c(1.0, -iu, 0.0)).norm() <= 1e-15);
  CHECK(m.omega == doctest::Approx(-1.0));
}

TEST_CASE("plane waves solve the evolution equation (finite-difference oracle)") {
  Rng rng(19);
  for (int trial = 0; trial < 4; ++trial) {
    PlaneWaveSpec spec;
    spec.k = rng.uniform_vec3(-0.6, 0.6);
    if (spec.k.norm() < 0.05) spec.k(2) += 0.5;
    spec.handedness = trial % 2 ? Handedness::left : Handedness::right;
    const AnalyticField w = AnalyticField::plane_wave(spec);
    const oracle::PointMap f = [&](double t, const Vec3& x) { return w(t, x); };
    for (int i = 0; i < 10; ++i) {
      const double t = rng.uniform(-1.0, 1.0);
      const Vec3 x = rng.uniform_vec3(-2.0, 2.0);
      CHECK(oracle::fd_vacuum_residual(f, t, x) <= 1e-12);
      CHECK(w.vacuum_residual(t, x) <= 1e-14);
    }
  }
}

TEST_CASE("plane wave rejects invalid specs") {
  PlaneWaveSpec spec;
  spec.k = Vec3::Zero();
  CHECK_THROWS_AS(AnalyticField::plane_wave(spec), std::invalid_argument);
  spec.k = Vec3(0, 0, 1);
  spec.amplitude = 0.0;
  CHECK_THROWS_AS(AnalyticField::plane_wave(spec), std::invalid_argument);
}

TEST_CASE("gauge phase rotates E and B into each other") {
  Rng rng(4);
  const Vec3 e = rng.uniform_vec3(-1.0, 1.0);
  const Vec3 b = rng.uniform_vec3(-1.0, 1.0);
  const Bivector psi = from_eb(e, b);

  CHECK((gauge_phase(psi, 0.0) - psi).norm() == 0.0);
  CHECK((gauge_phase(psi, M_PI) + psi).norm() <= 1e-15);

  // alpha = pi/2: E -> -B, B -> E; both invariants flip sign
  const auto [ep, bp] = to_eb(gauge_phase(psi, M_PI / 2.0));
  CHECK((ep + b).norm() <= 1e-14);
  CHECK((bp - e).norm() <= 1e-14);
  const PointObservables before = observables(psi);
  const PointObservables after = observables(gauge_phase(psi, M_PI / 2.0));
  CHECK(after.i1 == doctest::Approx(-before.i1).epsilon(1e-12));
  CHECK(after.i2 == doctest::Approx(-before.i2).epsilon(1e-12));
  CHECK(after.energy == doctest::Approx(before.energy).epsilon(1e-12));
  CHECK((after.poynting - before.poynting).norm() <= 1e-13);
}

TEST_CASE("gauge phase leaves the vacuum equation residual unchanged") {
  PlaneWaveSpec spec;
  spec.k = Vec3(0.3, -0.2, 0.4);
  const AnalyticField w = AnalyticField::plane_wave(spec);
  const AnalyticField shifted = gauge_phase(w, 1.234);
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const double t = rng.uniform(-1.0, 1.0);
    const Vec3 x = rng.uniform_vec3(-2.0, 2.0);
    CHECK(shifted.vacuum_residual(t, x) <= 1e-14);
  }
}
