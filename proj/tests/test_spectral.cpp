#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bivec/grid.hpp"
#include "bivec/spectral.hpp"
#include "support/oracles.hpp"

using namespace bivec;

namespace {

// Band-limited random field: a handful of random lattice modes.
FieldGrid random_band_limited(Rng& rng, int n, double h, int modes = 6) {
  AnalyticField f;
  const double unit = 2.0 * std::numbers::pi / (n * h);
  for (int m = 0; m < modes; ++m) {
    PlaneWaveMode mode;
    mode.k = unit * Vec3(static_cast<int>(rng.uniform(-3.0, 4.0)),
                         static_cast<int>(rng.uniform(-3.0, 4.0)),
                         static_cast<int>(rng.uniform(-3.0, 4.0)));
    mode.omega = mode.k.norm();
    for (int c = 0; c < 3; ++c)
      mode.amplitude(c) = cplx(rng.gaussian(), rng.gaussian()) * 0.3;
    f.add_mode(mode);
  }
  return sample_on_grid(f, n, h);
}

ScalarGrid random_scalar(Rng& rng, int n, double h) {
  ScalarGrid s;
  s.n = n;
  s.h = h;
  s.v.resize(static_cast<std::size_t>(n) * n * n);
  const double unit = 2.0 * std::numbers::pi / (n * h);
  // few smooth modes
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec3 x(i * h, j * h, k * h);
        cplx v = 0.0;
        v += std::exp(iu * unit * (1.0 * x(0) - 2.0 * x(1)));
        v += 0.5 * std::exp(iu * unit * (2.0 * x(2) + 1.0 * x(1)));
        s.v[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
      }
  (void)rng;
  return s;
}

}  // namespace

TEST_CASE("grid constructor validates shape") {
  CHECK_THROWS_AS(FieldGrid(3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(FieldGrid(12, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(FieldGrid(8, 0.0), std::invalid_argument);
  CHECK_NOTHROW(FieldGrid(4, 0.5));
}

TEST_CASE("constant field has zero divergence and curl") {
  FieldGrid g(8, 0.3);
  for (std::size_t s = 0; s < g.sites(); ++s)
    g.set_value(s, Vec3c(1.0, iu, cplx(0.5, -0.25)));
  CHECK(spectral::divergence(g).max_abs() <= 1e-13);
  double worst = 0.0;
  const FieldGrid c = spectral::curl(g);
  for (std::size_t s = 0; s < c.sites(); ++s) worst = std::max(worst, c.value(s).norm());
  CHECK(worst <= 1e-13);
}

TEST_CASE("lattice plane wave is transverse: spectral divergence vanishes") {
  const int n = 16;
  const double h = 2.0 * std::numbers::pi / n;
  PlaneWaveSpec spec;
  spec.k = Vec3(0, 0, 2.0);  // lattice mode m = 2
  const FieldGrid g = sample_on_grid(AnalyticField::plane_wave(spec), n, h);
  CHECK(spectral::divergence(g).max_abs() <= 1e-12);
}

TEST_CASE("spectral curl matches the analytic curl on a lattice mode") {
  const int n = 16;
  const double h = 0.4;
  const double unit = 2.0 * std::numbers::pi / (n * h);
  PlaneWaveSpec spec;
  spec.k = unit * Vec3(1, 0, 2);
  const AnalyticField w = AnalyticField::plane_wave(spec);
  const FieldGrid g = sample_on_grid(w, n, h);
  const FieldGrid c = spectral::curl(g);
  double worst = 0.0;
  for (int i = 0; i < n; i += 3)
    for (int j = 0; j < n; j += 3)
      for (int k = 0; k < n; k += 3) {
        const std::size_t s = g.site_index(i, j, k);
        worst = std::max(worst, (c.value(s) - w.curl(0.0, g.position(i, j, k))).norm());
      }
  CHECK(worst <= 1e-12);
}

TEST_CASE("div(curl(.)) vanishes to roundoff on random band-limited grids") {
  Rng rng(21);
  const FieldGrid g = random_band_limited(rng, 16, 0.37);
  CHECK(spectral::divergence(spectral::curl(g)).max_abs() <= 1e-12);
}

TEST_CASE("curl(grad(.)) vanishes to roundoff") {
  Rng rng(22);
  const ScalarGrid s = random_scalar(rng, 16, 0.29);
  const FieldGrid grad = spectral::gradient(s);
  const FieldGrid cg = spectral::curl(grad);
  double worst = 0.0;
  for (std::size_t i = 0; i < cg.sites(); ++i)
    worst = std::max(worst, cg.value(i).norm());
  CHECK(worst <= 1e-12);
}

TEST_CASE("transverse projection kills the divergence and is idempotent") {
  Rng rng(23);
  const FieldGrid g = random_band_limited(rng, 16, 0.5);
  const FieldGrid t = spectral::project_transverse(g);
  CHECK(spectral::divergence(t).max_abs() <= 1e-12);
  const FieldGrid t2 = spectral::project_transverse(t);
  double worst = 0.0;
  for (std::size_t s = 0; s < t.sites(); ++s)
    worst = std::max(worst, (t.value(s) - t2.value(s)).norm());
  CHECK(worst <= 1e-13);
}

TEST_CASE("laplacian of a lattice mode is -k^2 times the mode") {
  const int n = 8;
  const double h = 0.7;
  const double unit = 2.0 * std::numbers::pi / (n * h);
  PlaneWaveSpec spec;
  spec.k = unit * Vec3(0, 1, 1);
  const FieldGrid g = sample_on_grid(AnalyticField::plane_wave(spec), n, h);
  const FieldGrid lap = spectral::laplacian(g);
  const double k2 = spec.k.squaredNorm();
  double worst = 0.0;
  for (std::size_t s = 0; s < g.sites(); ++s)
    worst = std::max(worst, (lap.value(s) + k2 * g.value(s)).norm());
  CHECK(worst <= 1e-12);
}

TEST_CASE("integrated invariants match the bilinear sum") {
  Rng rng(24);
  const FieldGrid g = random_band_limited(rng, 8, 0.45);
  const InvariantReport rep = invariant_report(g);
  const cplx bil = grid_bilinear_invariant(g);
  CHECK(std::abs(rep.i1 - bil.real()) <= 1e-12 * (1.0 + std::abs(bil.real())));
  CHECK(std::abs(rep.i2 - bil.imag()) <= 1e-12 * (1.0 + std::abs(bil.imag())));
}

TEST_CASE("integrated Poynting flux of one circular mode is along k") {
  const int n = 8;
  const double h = 2.0 * std::numbers::pi / n;
  PlaneWaveSpec spec;
  spec.k = Vec3(0, 0, 3.0);

  const FieldGrid right = sample_on_grid(AnalyticField::plane_wave(spec), n, h);
  const InvariantReport rr = invariant_report(right);
  CHECK(rr.poynting(2) > 0.0);
  CHECK(std::abs(rr.poynting(0)) <= 1e-10 * rr.poynting(2));
  CHECK(std::abs(rr.poynting(1)) <= 1e-10 * rr.poynting(2));

  spec.handedness = Handedness::left;
  const InvariantReport ll =
      invariant_report(sample_on_grid(AnalyticField::plane_wave(spec), n, h));
  CHECK(ll.poynting(2) < 0.0);
}
