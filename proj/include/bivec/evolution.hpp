#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bivec/grid.hpp"

namespace bivec {

enum class Scheme { spectral_exact, rk4_fd };

struct EvolutionConfig {
  double dt = 0.0;
  int steps = 0;
  Scheme scheme = Scheme::spectral_exact;
  int fd_order = 2;   // centered-difference order for rk4_fd: 2 or 4
  double cfl = 0.5;   // rk4_fd stability bound: dt <= cfl * h
  double t0 = 0.0;

  void validate(const FieldGrid& grid) const;  // throws std::invalid_argument
};

/// Space-time current density entering d_t Psi = -i curl Psi - j, in the
/// units of that equation (the paper's absorbed normalization). The charge
/// is never dynamical: rho(x,t) = rho0(x) - int_0^t div j(x,s) ds.
struct FourCurrentSource {
  std::function<Vec3(const Vec3& x, double t)> j;
  std::function<double(const Vec3& x)> rho0;
  /// Optional analytic I(x,t) = int_0^t div j(x,s) ds. When absent the
  /// driver accumulates the integral with per-step Gauss-Legendre
  /// quadrature of the spectrally computed div j.
  std::function<double(const Vec3& x, double t)> div_j_integral;

  /// Max grid residual of d/dt I - div j at a probe time (continuity of
  /// the provided family). Zero when no analytic integral is given.
  double continuity_residual(const FieldGrid& layout, double t_probe) const;
};

// j = A sin(2 pi mode x2 / box) e1: divergence-free, static.
FourCurrentSource solenoidal_static_source(double amplitude, int mode, double box);

// j = A sin(2 pi mode x1 / box) g(t) e1 with a Gaussian envelope g around
// t0; the charge integral is analytic (erf).
FourCurrentSource gaussian_pulse_source(double amplitude, int mode, double box,
                                        double t0, double tau);

/// One row per completed step; divergence monitors are in bivector units
/// (div E and div B of the physical fields carry a further sqrt(2)).
struct ConservationRecord {
  int step = 0;
  double time = 0.0;
  double energy = 0.0;
  Vec3 poynting = Vec3::Zero();
  double max_div_b = 0.0;   // max |Im div Psi|
  double max_gauss = 0.0;   // max |Re div Psi - rho(t)|
};

struct ConservationLog {
  ConservationRecord initial;
  std::vector<ConservationRecord> records;

  void write_csv(const std::string& path) const;
  std::string to_csv() const;
};

struct blowup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact per-mode propagator of the vacuum equation: each Fourier mode is
/// rotated about khat by |k| dt.
FieldGrid step_vacuum_spectral(const FieldGrid& grid, double dt);

/// Classical RK4 step of d_t Psi = -i curl Psi with a centered
/// finite-difference curl of the given order. Throws on CFL violation.
FieldGrid step_rk4_fd(const FieldGrid& grid, double dt, int fd_order = 2,
                      double cfl = 0.5);

// Centered-difference counterparts of the spectral operators.
FieldGrid fd_curl(const FieldGrid& grid, int order);
ScalarGrid fd_divergence(const FieldGrid& grid, int order);

struct EvolveResult {
  FieldGrid final;
  ConservationLog log;
};

using StepCallback = std::function<void(int step, double t, const FieldGrid&)>;

EvolveResult evolve_with_current(const FieldGrid& initial, const FourCurrentSource& src,
                                 const EvolutionConfig& cfg,
                                 const StepCallback& on_step = {});
EvolveResult evolve_vacuum(const FieldGrid& initial, const EvolutionConfig& cfg,
                           const StepCallback& on_step = {});

/// Discrete check of the free wave equation: max site norm of the central
/// second time difference minus the spectral Laplacian of the middle grid.
double wave_equation_residual(const FieldGrid& prev, const FieldGrid& mid,
                              const FieldGrid& next, double dt);

}  // namespace bivec
