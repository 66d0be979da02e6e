#include "bivec/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>

namespace bivec {
namespace spectral {

namespace {

// One cached in-place plan pair per grid size. Plans are created with
// FFTW_ESTIMATE (deterministic) and FFTW_UNALIGNED so they can be executed
// on any array via fftw_execute_dft.
struct PlanPair {
  fftw_plan fwd;
  fftw_plan inv;
};

PlanPair plans_for(int n) {
  static std::map<int, PlanPair> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> scratch(static_cast<std::size_t>(n) * n * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.inv = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache[n] = p;
  return p;
}

}  // namespace

double wavenumber(int i, int n, double h) {
  return 2.0 * std::numbers::pi * mode_number(i, n) / (n * h);
}

void fft_forward(std::vector<cplx>& data, int n) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_for(n).fwd, buf, buf);
}

void fft_inverse(std::vector<cplx>& data, int n) {
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_for(n).inv, buf, buf);
  const double scale = 1.0 / (static_cast<double>(n) * n * n);
  for (cplx& z : data) z *= scale;
}

namespace {

// Applies op(kvec, psi_hat) to every Fourier mode of a 3-component field.
template <typename Op>
void for_each_mode(const FieldGrid& grid, std::vector<std::vector<cplx>>& hat, Op op) {
  const int n = grid.n();
  for (int c = 0; c < 3; ++c) {
    auto comp = grid.component(c);
    hat[c].assign(comp.begin(), comp.end());
    fft_forward(hat[c], n);
  }
  std::size_t s = 0;
  for (int i = 0; i < n; ++i) {
    const double kx = wavenumber(i, n, grid.h());
    for (int j = 0; j < n; ++j) {
      const double ky = wavenumber(j, n, grid.h());
      for (int k = 0; k < n; ++k, ++s) {
        const Vec3 kvec(kx, ky, wavenumber(k, n, grid.h()));
        Vec3c v(hat[0][s], hat[1][s], hat[2][s]);
        op(kvec, v);
        hat[0][s] = v(0);
        hat[1][s] = v(1);
        hat[2][s] = v(2);
      }
    }
  }
}

FieldGrid vector_result(const FieldGrid& grid, std::vector<std::vector<cplx>>& hat) {
  FieldGrid out(grid.n(), grid.h());
  for (int c = 0; c < 3; ++c) {
    fft_inverse(hat[c], grid.n());
    std::copy(hat[c].begin(), hat[c].end(), out.component(c).begin());
  }
  return out;
}

}  // namespace

ScalarGrid divergence(const FieldGrid& grid) {
  const int n = grid.n();
  std::vector<std::vector<cplx>> hat(3);
  ScalarGrid div;
  div.n = n;
  div.h = grid.h();
  div.v.assign(grid.sites(), cplx(0.0));

  for (int c = 0; c < 3; ++c) {
    auto comp = grid.component(c);
    hat[c].assign(comp.begin(), comp.end());
    fft_forward(hat[c], n);
  }
  std::size_t s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++s) {
        const cplx dx = iu * wavenumber(i, n, grid.h()) * hat[0][s];
        const cplx dy = iu * wavenumber(j, n, grid.h()) * hat[1][s];
        const cplx dz = iu * wavenumber(k, n, grid.h()) * hat[2][s];
        div.v[s] = dx + dy + dz;
      }
  fft_inverse(div.v, n);
  return div;
}

FieldGrid curl(const FieldGrid& grid) {
  std::vector<std::vector<cplx>> hat(3);
  for_each_mode(grid, hat, [](const Vec3& kvec, Vec3c& v) {
    v = bilinear_cross(iu * kvec.cast<cplx>(), v);
  });
  return vector_result(grid, hat);
}

FieldGrid gradient(const ScalarGrid& scalar) {
  const int n = scalar.n;
  std::vector<cplx> hat(scalar.v);
  fft_forward(hat, n);

  FieldGrid out(n, scalar.h);
  std::vector<std::vector<cplx>> comp(3, std::vector<cplx>(hat.size()));
  std::size_t s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k, ++s) {
        comp[0][s] = iu * wavenumber(i, n, scalar.h) * hat[s];
        comp[1][s] = iu * wavenumber(j, n, scalar.h) * hat[s];
        comp[2][s] = iu * wavenumber(k, n, scalar.h) * hat[s];
      }
  for (int c = 0; c < 3; ++c) {
    fft_inverse(comp[c], n);
    std::copy(comp[c].begin(), comp[c].end(), out.component(c).begin());
  }
  return out;
}

FieldGrid laplacian(const FieldGrid& grid) {
  std::vector<std::vector<cplx>> hat(3);
  for_each_mode(grid, hat,
                [](const Vec3& kvec, Vec3c& v) { v *= -kvec.squaredNorm(); });
  return vector_result(grid, hat);
}

FieldGrid project_transverse(const FieldGrid& grid) {
  std::vector<std::vector<cplx>> hat(3);
  for_each_mode(grid, hat, [](const Vec3& kvec, Vec3c& v) {
    const double k2 = kvec.squaredNorm();
    if (k2 == 0.0) return;
    const Vec3c khat = (kvec / std::sqrt(k2)).cast<cplx>();
    v -= khat * bilinear_dot(khat, v);
  });
  return vector_result(grid, hat);
}

}  // namespace spectral
}  // namespace bivec
