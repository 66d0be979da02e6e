#include "bivec/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bivec {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

FieldGrid::FieldGrid(int n, double h) : n_(n), h_(h) {
  if (n < 4 || !power_of_two(n))
    throw std::invalid_argument("grid size must be a power of two >= 4");
  if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  data_.assign(3 * sites(), cplx(0.0));
}

bool FieldGrid::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ScalarGrid::max_abs() const {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

double ScalarGrid::max_abs_real() const {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z.real()));
  return m;
}

double ScalarGrid::max_abs_imag() const {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z.imag()));
  return m;
}

InvariantReport invariant_report(const FieldGrid& grid) {
  InvariantReport r;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const PointObservables o = observables(grid.value(s));
    r.i1 += o.i1;
    r.i2 += o.i2;
    r.energy += o.energy;
    r.poynting += o.poynting;
  }
  const double vol = grid.h() * grid.h() * grid.h();
  r.i1 *= vol;
  r.i2 *= vol;
  r.energy *= vol;
  r.poynting *= vol;
  return r;
}

cplx grid_bilinear_invariant(const FieldGrid& grid) {
  cplx sum = 0.0;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const Bivector v = grid.value(s);
    sum += bilinear_dot(v, v);
  }
  return sum * grid.h() * grid.h() * grid.h();
}

FieldGrid sample_on_grid(const AnalyticField& field, int n, double h, double t) {
  FieldGrid grid(n, h);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        grid.set_value(grid.site_index(i, j, k), field(t, grid.position(i, j, k)));
  return grid;
}

FieldGrid gauge_phase(const FieldGrid& grid, double alpha) {
  FieldGrid out = grid;
  const cplx phase = std::exp(iu * alpha);
  for (int c = 0; c < 3; ++c)
    for (cplx& z : out.component(c)) z *= phase;
  return out;
}

}  // namespace bivec
