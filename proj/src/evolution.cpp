#include "bivec/evolution.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "bivec/lorentz.hpp"
#include "bivec/spectral.hpp"

namespace bivec {

void EvolutionConfig::validate(const FieldGrid& grid) const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (scheme == Scheme::rk4_fd) {
    if (fd_order != 2 && fd_order != 4)
      throw std::invalid_argument("fd_order must be 2 or 4");
    if (dt > cfl * grid.h())
      throw std::invalid_argument("CFL violation: dt > cfl * h");
  }
}

double FourCurrentSource::continuity_residual(const FieldGrid& layout,
                                              double t_probe) const {
  if (!div_j_integral) return 0.0;
  const double delta = 1e-4;
  FieldGrid jgrid(layout.n(), layout.h());
  for (int i = 0; i < layout.n(); ++i)
    for (int jj = 0; jj < layout.n(); ++jj)
      for (int k = 0; k < layout.n(); ++k) {
        const std::size_t s = layout.site_index(i, jj, k);
        jgrid.set_value(s, j(layout.position(i, jj, k), t_probe).cast<cplx>());
      }
  const ScalarGrid divj = spectral::divergence(jgrid);

  double worst = 0.0;
  for (int i = 0; i < layout.n(); ++i)
    for (int jj = 0; jj < layout.n(); ++jj)
      for (int k = 0; k < layout.n(); ++k) {
        const Vec3 x = layout.position(i, jj, k);
        const double didt =
            (div_j_integral(x, t_probe + delta) - div_j_integral(x, t_probe - delta)) /
            (2.0 * delta);
        const std::size_t s = layout.site_index(i, jj, k);
        worst = std::max(worst, std::abs(didt - divj.v[s].real()));
      }
  return worst;
}

FourCurrentSource solenoidal_static_source(double amplitude, int mode, double box) {
  const double q = 2.0 * std::numbers::pi * mode / box;
  FourCurrentSource src;
  src.j = [amplitude, q](const Vec3& x, double) -> Vec3 {
    return {amplitude * std::sin(q * x(1)), 0.0, 0.0};
  };
  src.rho0 = [](const Vec3&) { return 0.0; };
  src.div_j_integral = [](const Vec3&, double) { return 0.0; };
  return src;
}

FourCurrentSource gaussian_pulse_source(double amplitude, int mode, double box,
                                        double t0, double tau) {
  const double q = 2.0 * std::numbers::pi * mode / box;
  const auto envelope = [t0, tau](double t) {
    return std::exp(-(t - t0) * (t - t0) / (2.0 * tau * tau));
  };
  // G(t) = int_0^t g, in closed form.
  const auto envelope_integral = [t0, tau](double t) {
    const double c = tau * std::sqrt(std::numbers::pi / 2.0);
    return c * (std::erf((t - t0) / (tau * std::sqrt(2.0))) +
                std::erf(t0 / (tau * std::sqrt(2.0))));
  };

  FourCurrentSource src;
  src.j = [amplitude, q, envelope](const Vec3& x, double t) -> Vec3 {
    return {amplitude * std::sin(q * x(0)) * envelope(t), 0.0, 0.0};
  };
  src.rho0 = [](const Vec3&) { return 0.0; };
  src.div_j_integral = [amplitude, q, envelope_integral](const Vec3& x, double t) {
    return amplitude * q * std::cos(q * x(0)) * envelope_integral(t);
  };
  return src;
}

std::string ConservationLog::to_csv() const {
  std::string out = "step,time,energy,sx,sy,sz,max_divB,max_gauss_residual\n";
  char line[256];
  const auto emit = [&](const ConservationRecord& r) {
    std::snprintf(line, sizeof line,
                  "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step, r.time,
                  r.energy, r.poynting(0), r.poynting(1), r.poynting(2), r.max_div_b,
                  r.max_gauss);
    out += line;
  };
  emit(initial);
  for (const auto& r : records) emit(r);
  return out;
}

void ConservationLog::write_csv(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error(path + ": cannot open for writing");
  os << to_csv();
}

namespace {

using spectral::fft_forward;
using spectral::fft_inverse;
using spectral::wavenumber;

// Per-mode propagator exp(dt [k x]): rotation about khat by |k| dt.
// Cached as a table because every step of a run reuses the same dt.
std::vector<Mat3> rotation_table(int n, double h, double dt) {
  std::vector<Mat3> table(static_cast<std::size_t>(n) * n * n);
  std::size_t s = 0;
  for (int i = 0; i < n; ++i) {
    const double kx = wavenumber(i, n, h);
    for (int j = 0; j < n; ++j) {
      const double ky = wavenumber(j, n, h);
      for (int k = 0; k < n; ++k, ++s) {
        const Vec3 kvec(kx, ky, wavenumber(k, n, h));
        table[s] = kvec.norm() == 0.0 ? Mat3::Identity() : exp_so3(dt * kvec);
      }
    }
  }
  return table;
}

void rotate_modes(std::vector<std::vector<cplx>>& hat, const std::vector<Mat3>& table) {
  for (std::size_t s = 0; s < table.size(); ++s) {
    const Mat3& r = table[s];
    const cplx v0 = hat[0][s], v1 = hat[1][s], v2 = hat[2][s];
    hat[0][s] = r(0, 0) * v0 + r(0, 1) * v1 + r(0, 2) * v2;
    hat[1][s] = r(1, 0) * v0 + r(1, 1) * v1 + r(1, 2) * v2;
    hat[2][s] = r(2, 0) * v0 + r(2, 1) * v1 + r(2, 2) * v2;
  }
}

std::vector<std::vector<cplx>> to_hat(const FieldGrid& grid) {
  std::vector<std::vector<cplx>> hat(3);
  for (int c = 0; c < 3; ++c) {
    auto comp = grid.component(c);
    hat[c].assign(comp.begin(), comp.end());
    fft_forward(hat[c], grid.n());
  }
  return hat;
}

FieldGrid from_hat(std::vector<std::vector<cplx>> hat, int n, double h) {
  FieldGrid out(n, h);
  for (int c = 0; c < 3; ++c) {
    fft_inverse(hat[c], n);
    std::copy(hat[c].begin(), hat[c].end(), out.component(c).begin());
  }
  return out;
}

FieldGrid sample_current(const FourCurrentSource& src, const FieldGrid& layout,
                         double t) {
  FieldGrid jgrid(layout.n(), layout.h());
  for (int i = 0; i < layout.n(); ++i)
    for (int j = 0; j < layout.n(); ++j)
      for (int k = 0; k < layout.n(); ++k) {
        const std::size_t s = layout.site_index(i, j, k);
        jgrid.set_value(s, src.j(layout.position(i, j, k), t).cast<cplx>());
      }
  return jgrid;
}

struct SpectralTables {
  std::vector<Mat3> full;
  std::vector<Mat3> half;  // built only when a source is present
};

// Exact vacuum propagation plus midpoint source quadrature:
// psi <- U(dt) psi - dt U(dt/2) j(t + dt/2).
FieldGrid step_spectral(const FieldGrid& grid, const FourCurrentSource* src, double t,
                        double dt, const SpectralTables& tables) {
  auto hat = to_hat(grid);
  rotate_modes(hat, tables.full);
  if (src) {
    auto jhat = to_hat(sample_current(*src, grid, t + 0.5 * dt));
    rotate_modes(jhat, tables.half);
    for (int c = 0; c < 3; ++c)
      for (std::size_t s = 0; s < hat[c].size(); ++s) hat[c][s] -= dt * jhat[c][s];
  }
  return from_hat(std::move(hat), grid.n(), grid.h());
}

void add_scaled(FieldGrid& acc, const FieldGrid& g, double w) {
  for (int c = 0; c < 3; ++c) {
    auto a = acc.component(c);
    auto b = g.component(c);
    for (std::size_t s = 0; s < a.size(); ++s) a[s] += w * b[s];
  }
}

FieldGrid rk4_rhs(const FieldGrid& grid, const FourCurrentSource* src, double t,
                  int fd_order) {
  FieldGrid rhs = fd_curl(grid, fd_order);
  for (int c = 0; c < 3; ++c)
    for (cplx& z : rhs.component(c)) z *= -iu;
  if (src) {
    for (int i = 0; i < grid.n(); ++i)
      for (int j = 0; j < grid.n(); ++j)
        for (int k = 0; k < grid.n(); ++k) {
          const std::size_t s = grid.site_index(i, j, k);
          const Vec3 jv = src->j(grid.position(i, j, k), t);
          rhs.set_value(s, rhs.value(s) - jv.cast<cplx>());
        }
  }
  return rhs;
}

FieldGrid step_rk4(const FieldGrid& grid, const FourCurrentSource* src, double t,
                   double dt, int fd_order) {
  const FieldGrid k1 = rk4_rhs(grid, src, t, fd_order);
  FieldGrid y2 = grid;
  add_scaled(y2, k1, 0.5 * dt);
  const FieldGrid k2 = rk4_rhs(y2, src, t + 0.5 * dt, fd_order);
  FieldGrid y3 = grid;
  add_scaled(y3, k2, 0.5 * dt);
  const FieldGrid k3 = rk4_rhs(y3, src, t + 0.5 * dt, fd_order);
  FieldGrid y4 = grid;
  add_scaled(y4, k3, dt);
  const FieldGrid k4 = rk4_rhs(y4, src, t + dt, fd_order);

  FieldGrid out = grid;
  add_scaled(out, k1, dt / 6.0);
  add_scaled(out, k2, dt / 3.0);
  add_scaled(out, k3, dt / 3.0);
  add_scaled(out, k4, dt / 6.0);
  return out;
}

// Gauss-Legendre 5 on [0,1].
constexpr std::array<double, 5> kGlNodes = {
    0.046910077030668004, 0.23076534494715845, 0.5, 0.76923465505284155,
    0.953089922969332};
constexpr std::array<double, 5> kGlWeights = {
    0.11846344252809454, 0.23931433524968324, 0.28444444444444444,
    0.23931433524968324, 0.11846344252809454};

class ChargeTracker {
 public:
  ChargeTracker(const FourCurrentSource* src, const FieldGrid& layout)
      : src_(src), layout_(layout.n(), layout.h()) {
    rho_.assign(layout.sites(), 0.0);
    if (!src) return;
    std::size_t s = 0;
    for (int i = 0; i < layout.n(); ++i)
      for (int j = 0; j < layout.n(); ++j)
        for (int k = 0; k < layout.n(); ++k, ++s)
          rho_[s] = src->rho0(layout.position(i, j, k));
    rho0_ = rho_;
  }

  // rho(t) = rho0 - I(t), with I analytic or accumulated by quadrature.
  void advance(double t_begin, double dt) {
    if (!src_) return;
    if (src_->div_j_integral) {
      std::size_t s = 0;
      for (int i = 0; i < layout_.n(); ++i)
        for (int j = 0; j < layout_.n(); ++j)
          for (int k = 0; k < layout_.n(); ++k, ++s)
            rho_[s] = rho0_[s] -
                      src_->div_j_integral(layout_.position(i, j, k), t_begin + dt);
      return;
    }
    for (std::size_t q = 0; q < kGlNodes.size(); ++q) {
      const double tq = t_begin + kGlNodes[q] * dt;
      const ScalarGrid divj = spectral::divergence(sample_current(*src_, layout_, tq));
      for (std::size_t s = 0; s < rho_.size(); ++s)
        rho_[s] -= dt * kGlWeights[q] * divj.v[s].real();
    }
  }

  const std::vector<double>& rho() const { return rho_; }

 private:
  const FourCurrentSource* src_;
  FieldGrid layout_;
  std::vector<double> rho_;
  std::vector<double> rho0_;
};

ConservationRecord make_record(int step, double t, const FieldGrid& grid,
                               const std::vector<double>& rho, Scheme scheme,
                               int fd_order) {
  ConservationRecord r;
  r.step = step;
  r.time = t;
  const InvariantReport inv = invariant_report(grid);
  r.energy = inv.energy;
  r.poynting = inv.poynting;
  // Divergence monitor matches the scheme's derivative operator.
  const ScalarGrid div = scheme == Scheme::spectral_exact
                             ? spectral::divergence(grid)
                             : fd_divergence(grid, fd_order);
  r.max_div_b = div.max_abs_imag();
  double worst = 0.0;
  for (std::size_t s = 0; s < div.v.size(); ++s)
    worst = std::max(worst, std::abs(div.v[s].real() - rho[s]));
  r.max_gauss = worst;
  return r;
}

}  // namespace

FieldGrid step_vacuum_spectral(const FieldGrid& grid, double dt) {
  SpectralTables tables;
  tables.full = rotation_table(grid.n(), grid.h(), dt);
  return step_spectral(grid, nullptr, 0.0, dt, tables);
}

FieldGrid step_rk4_fd(const FieldGrid& grid, double dt, int fd_order, double cfl) {
  if (dt > cfl * grid.h())
    throw std::invalid_argument("CFL violation: dt > cfl * h");
  return step_rk4(grid, nullptr, 0.0, dt, fd_order);
}

FieldGrid fd_curl(const FieldGrid& grid, int order) {
  if (order != 2 && order != 4) throw std::invalid_argument("fd order must be 2 or 4");
  const int n = grid.n();
  const double h = grid.h();
  FieldGrid out(n, h);

  // partial(axis, comp) at (i,j,k) with periodic wrap
  const auto partial = [&](int axis, int c, int i, int j, int k) -> cplx {
    int idx[3] = {i, j, k};
    const auto shifted = [&](int d) {
      int t[3] = {idx[0], idx[1], idx[2]};
      t[axis] = ((t[axis] + d) % n + n) % n;
      return grid.at(c, grid.site_index(t[0], t[1], t[2]));
    };
    if (order == 2) return (shifted(1) - shifted(-1)) / (2.0 * h);
    return (-shifted(2) + 8.0 * shifted(1) - 8.0 * shifted(-1) + shifted(-2)) /
           (12.0 * h);
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const std::size_t s = grid.site_index(i, j, k);
        out.at(0, s) = partial(1, 2, i, j, k) - partial(2, 1, i, j, k);
        out.at(1, s) = partial(2, 0, i, j, k) - partial(0, 2, i, j, k);
        out.at(2, s) = partial(0, 1, i, j, k) - partial(1, 0, i, j, k);
      }
  return out;
}

ScalarGrid fd_divergence(const FieldGrid& grid, int order) {
  if (order != 2 && order != 4) throw std::invalid_argument("fd order must be 2 or 4");
  const int n = grid.n();
  const double h = grid.h();
  ScalarGrid out;
  out.n = n;
  out.h = h;
  out.v.assign(grid.sites(), cplx(0.0));

  const auto partial = [&](int axis, int c, int i, int j, int k) -> cplx {
    int idx[3] = {i, j, k};
    const auto shifted = [&](int d) {
      int t[3] = {idx[0], idx[1], idx[2]};
      t[axis] = ((t[axis] + d) % n + n) % n;
      return grid.at(c, grid.site_index(t[0], t[1], t[2]));
    };
    if (order == 2) return (shifted(1) - shifted(-1)) / (2.0 * h);
    return (-shifted(2) + 8.0 * shifted(1) - 8.0 * shifted(-1) + shifted(-2)) /
           (12.0 * h);
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.v[grid.site_index(i, j, k)] = partial(0, 0, i, j, k) +
                                          partial(1, 1, i, j, k) +
                                          partial(2, 2, i, j, k);
  return out;
}

static EvolveResult evolve_impl(const FieldGrid& initial, const FourCurrentSource* src,
                                const EvolutionConfig& cfg, const StepCallback& on_step) {
  cfg.validate(initial);
  if (src && src->div_j_integral) {
    const double res = src->continuity_residual(initial, cfg.t0 + 0.5 * cfg.steps * cfg.dt);
    if (res > 1e-5)
      throw std::invalid_argument("source violates the continuity equation (residual " +
                                  std::to_string(res) + ")");
  }

  ChargeTracker charge(src, initial);
  FieldGrid state = initial;
  ConservationLog log;
  log.initial = make_record(0, cfg.t0, state, charge.rho(), cfg.scheme, cfg.fd_order);

  SpectralTables tables;
  if (cfg.scheme == Scheme::spectral_exact) {
    tables.full = rotation_table(initial.n(), initial.h(), cfg.dt);
    if (src) tables.half = rotation_table(initial.n(), initial.h(), 0.5 * cfg.dt);
  }

  double t = cfg.t0;
  for (int step = 1; step <= cfg.steps; ++step) {
    state = cfg.scheme == Scheme::spectral_exact
                ? step_spectral(state, src, t, cfg.dt, tables)
                : step_rk4(state, src, t, cfg.dt, cfg.fd_order);
    charge.advance(t, cfg.dt);
    t = cfg.t0 + step * cfg.dt;
    if (!state.all_finite())
      throw blowup_error("field became non-finite at step " + std::to_string(step));
    log.records.push_back(
        make_record(step, t, state, charge.rho(), cfg.scheme, cfg.fd_order));
    if (on_step) on_step(step, t, state);
  }
  return {std::move(state), std::move(log)};
}

EvolveResult evolve_with_current(const FieldGrid& initial, const FourCurrentSource& src,
                                 const EvolutionConfig& cfg, const StepCallback& on_step) {
  return evolve_impl(initial, &src, cfg, on_step);
}

EvolveResult evolve_vacuum(const FieldGrid& initial, const EvolutionConfig& cfg,
                           const StepCallback& on_step) {
  return evolve_impl(initial, nullptr, cfg, on_step);
}

double wave_equation_residual(const FieldGrid& prev, const FieldGrid& mid,
                              const FieldGrid& next, double dt) {
  if (!prev.same_layout(mid) || !mid.same_layout(next))
    throw std::invalid_argument("wave_equation_residual: mismatched grids");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

  const FieldGrid lap = spectral::laplacian(mid);
  double worst = 0.0;
  for (std::size_t s = 0; s < mid.sites(); ++s) {
    const Bivector second =
        (next.value(s) - 2.0 * mid.value(s) + prev.value(s)) / (dt * dt);
    worst = std::max(worst, (second - lap.value(s)).norm());
  }
  return worst;
}

}  // namespace bivec
