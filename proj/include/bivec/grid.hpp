#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bivec/analytic.hpp"
#include "bivec/bivector.hpp"
#include "bivec/types.hpp"

namespace bivec {

/// Periodic n^3 lattice of bivector values with spacing h. Storage is
/// component-major; site order is row-major with x3 fastest, matching the
/// dump format. n must be a power of two >= 4.
class FieldGrid {
 public:
  FieldGrid(int n, double h);

  int n() const { return n_; }
  double h() const { return h_; }
  double box_length() const { return n_ * h_; }
  std::size_t sites() const { return static_cast<std::size_t>(n_) * n_ * n_; }

  std::size_t site_index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  Vec3 position(int i, int j, int k) const { return {i * h_, j * h_, k * h_}; }

  cplx& at(int c, std::size_t site) { return data_[c * sites() + site]; }
  const cplx& at(int c, std::size_t site) const { return data_[c * sites() + site]; }

  Bivector value(std::size_t site) const {
    return {data_[site], data_[sites() + site], data_[2 * sites() + site]};
  }
  void set_value(std::size_t site, const Bivector& v) {
    data_[site] = v(0);
    data_[sites() + site] = v(1);
    data_[2 * sites() + site] = v(2);
  }

  std::span<cplx> component(int c) { return {data_.data() + c * sites(), sites()}; }
  std::span<const cplx> component(int c) const {
    return {data_.data() + c * sites(), sites()};
  }

  bool all_finite() const;
  bool same_layout(const FieldGrid& other) const {
    return n_ == other.n_ && h_ == other.h_;
  }

 private:
  int n_;
  double h_;
  std::vector<cplx> data_;
};

/// Complex scalar field on the same lattice (divergence values etc.).
struct ScalarGrid {
  int n = 0;
  double h = 0.0;
  std::vector<cplx> v;

  double max_abs() const;
  double max_abs_real() const;
  double max_abs_imag() const;
};

/// Integrated observables of a grid (sums times h^3).
struct InvariantReport {
  double i1 = 0.0;
  double i2 = 0.0;
  double energy = 0.0;
  Vec3 poynting = Vec3::Zero();
};

InvariantReport invariant_report(const FieldGrid& grid);

// Sum of Psi^T Psi h^3 over the grid; equals i1 + i i2 of the report.
cplx grid_bilinear_invariant(const FieldGrid& grid);

FieldGrid sample_on_grid(const AnalyticField& field, int n, double h, double t = 0.0);
FieldGrid gauge_phase(const FieldGrid& grid, double alpha);

}  // namespace bivec
