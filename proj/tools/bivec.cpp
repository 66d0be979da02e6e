// Command-line driver: simulation runs, field transformations, no-go
// certificates, and dump inspection.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>

#include "bivec/config.hpp"
#include "bivec/grid.hpp"
#include "bivec/rng.hpp"
#include "bivec/rsbv_io.hpp"
#include "bivec/verify.hpp"

namespace fs = std::filesystem;
using namespace bivec;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBlowup = 3;
constexpr int kExitIo = 4;

std::string joined(const std::string& out_dir, const std::string& path) {
  if (out_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(out_dir) / path).string();
}

std::string step_dump_name(const std::string& base, int step) {
  const fs::path p(base);
  char suffix[32];
  std::snprintf(suffix, sizeof suffix, "_step%06d", step);
  fs::path out = p.parent_path() / (p.stem().string() + suffix + p.extension().string());
  return out.string();
}

struct Overrides {
  std::optional<int> steps;
  std::optional<double> dt;
  std::optional<std::string> scheme;

  void apply(cli::KeyValues& kv) const {
    if (steps) kv.override_value("steps", std::to_string(*steps));
    if (dt) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", *dt);
      kv.override_value("dt", buf);
    }
    if (scheme) kv.override_value("scheme", *scheme);
  }
};

FieldGrid build_initial(const cli::SimulateConfig& cfg) {
  switch (cfg.init) {
    case cli::InitKind::dump:
      return read_rsbv(cfg.dump_in);
    case cli::InitKind::zero:
      return FieldGrid(cfg.grid_n, cfg.grid_h);
    case cli::InitKind::plane_wave:
    default: {
      const double unit = 2.0 * std::numbers::pi / (cfg.grid_n * cfg.grid_h);
      PlaneWaveSpec spec;
      spec.k = unit * Vec3(cfg.wave_mx, cfg.wave_my, cfg.wave_mz);
      spec.handedness = cfg.wave_handedness;
      spec.amplitude = cfg.wave_amplitude;
      return sample_on_grid(AnalyticField::plane_wave(spec), cfg.grid_n, cfg.grid_h);
    }
  }
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 const Overrides& ovr) {
  cli::KeyValues kv = cli::KeyValues::parse_file(config_path);
  ovr.apply(kv);
  const cli::SimulateConfig cfg = cli::SimulateConfig::from(kv);

  FieldGrid initial = build_initial(cfg);
  if (cfg.init == cli::InitKind::dump &&
      (initial.n() != cfg.grid_n || initial.h() != cfg.grid_h))
    throw cli::ConfigError("dump_in grid does not match grid_n/grid_h");
  cfg.evolution.validate(initial);

  std::optional<FourCurrentSource> src;
  const double box = cfg.grid_n * cfg.grid_h;
  if (cfg.source == cli::SourceKind::solenoidal_static)
    src = solenoidal_static_source(cfg.source_amplitude, cfg.source_mode, box);
  else if (cfg.source == cli::SourceKind::gaussian_pulse)
    src = gaussian_pulse_source(cfg.source_amplitude, cfg.source_mode, box,
                                cfg.source_t0, cfg.source_tau);

  const std::string dump_path = joined(out_dir, cfg.out_dump);
  StepCallback on_step;
  if (cfg.dump_every > 0) {
    on_step = [&](int step, double, const FieldGrid& g) {
      if (step % cfg.dump_every == 0) write_rsbv(step_dump_name(dump_path, step), g);
    };
  }

  EvolveResult result = src ? evolve_with_current(initial, *src, cfg.evolution, on_step)
                            : evolve_vacuum(initial, cfg.evolution, on_step);

  write_rsbv(dump_path, result.final);
  result.log.write_csv(joined(out_dir, cfg.out_csv));

  double max_delta = 0.0;
  for (int c = 0; c < 3; ++c) {
    auto a = result.final.component(c);
    auto b = initial.component(c);
    for (std::size_t s = 0; s < a.size(); ++s)
      max_delta = std::max(max_delta, std::abs(a[s] - b[s]));
  }
  double max_gauss = result.log.initial.max_gauss;
  double max_div_b = result.log.initial.max_div_b;
  for (const auto& r : result.log.records) {
    max_gauss = std::max(max_gauss, r.max_gauss);
    max_div_b = std::max(max_div_b, r.max_div_b);
  }
  const auto& last =
      result.log.records.empty() ? result.log.initial : result.log.records.back();
  std::printf("steps=%d\n", cfg.evolution.steps);
  std::printf("final_time=%.17g\n", last.time);
  std::printf("final_energy=%.17g\n", last.energy);
  std::printf("max_divB=%.12g\n", max_div_b);
  std::printf("max_gauss_residual=%.12g\n", max_gauss);
  std::printf("max_delta_from_initial=%.12g\n", max_delta);
  std::printf("dump=%s\n", dump_path.c_str());
  return 0;
}

// Exact lattice (quarter-turn) rotation, or nothing.
std::optional<Eigen::Matrix3i> lattice_rotation(const Mat3c& q) {
  if (q.imag().cwiseAbs().maxCoeff() > 1e-12) return std::nullopt;
  Eigen::Matrix3i r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double v = q(i, j).real();
      const double rounded = std::round(v);
      if (std::abs(v - rounded) > 1e-12 || std::abs(rounded) > 1.0) return std::nullopt;
      r(i, j) = static_cast<int>(rounded);
    }
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      row += r(i, j) * r(i, j);
      col += r(j, i) * r(j, i);
    }
    if (row != 1 || col != 1) return std::nullopt;
  }
  return r;
}

int cmd_transform(const std::string& config_path, const std::string& out_dir,
                  std::uint64_t seed) {
  cli::KeyValues kv = cli::KeyValues::parse_file(config_path);
  const cli::TransformConfig cfg = cli::TransformConfig::from(kv);
  const std::string dump_path = joined(out_dir, cfg.out_dump);

  if (cfg.input == cli::InitKind::dump) {
    const FieldGrid grid = read_rsbv(cfg.dump_in);
    if (cfg.params.xi.norm() != 0.0)
      throw cli::ConfigError(
          "boosts on sampled grids are not supported (a single-time grid lacks the "
          "data); use input = plane_wave");

    const InvariantReport before = invariant_report(grid);
    FieldGrid out = grid;
    if (cfg.params.alpha.norm() != 0.0) {
      const Mat3c q = exp_complex_rotation(cfg.params).q;
      const auto rot = lattice_rotation(q);
      if (!rot)
        throw cli::ConfigError(
            "only lattice (quarter-turn) rotations can be applied to a sampled grid; "
            "use input = plane_wave for general rotations");
      const Eigen::Matrix3i r = *rot;
      const Eigen::Matrix3i rinv = r.transpose();  // orthogonal integer matrix
      const int n = grid.n();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const Eigen::Vector3i mp(i, j, k);
            const Eigen::Vector3i m = rinv * mp;
            const std::size_t src_site = grid.site_index(
                ((m(0) % n) + n) % n, ((m(1) % n) + n) % n, ((m(2) % n) + n) % n);
            Bivector v = grid.value(src_site);
            Bivector w = Bivector::Zero();
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) w(a) += static_cast<double>(r(a, b)) * v(b);
            out.set_value(out.site_index(i, j, k), w);
          }
    }
    write_rsbv(dump_path, out);
    const InvariantReport after = invariant_report(out);
    std::printf("input=dump n=%d h=%.17g\n", grid.n(), grid.h());
    std::printf("i1_before=%.17g i1_after=%.17g delta=%.12g\n", before.i1, after.i1,
                std::abs(after.i1 - before.i1));
    std::printf("i2_before=%.17g i2_after=%.17g delta=%.12g\n", before.i2, after.i2,
                std::abs(after.i2 - before.i2));
    std::printf("dump=%s\n", dump_path.c_str());
    return 0;
  }

  PlaneWaveSpec spec;
  spec.k = cfg.wave_k;
  spec.handedness = cfg.wave_handedness;
  spec.amplitude = cfg.wave_amplitude;
  const AnalyticField field = AnalyticField::plane_wave(spec);
  const AnalyticField transformed = transform_analytic(cfg.params, field);

  // Pointwise invariants at matched points x = Lambda^{-1} x'.
  const Mat4 lam_inv = exp_lorentz(cfg.params).m.inverse();
  Rng rng(seed);
  double max_d1 = 0.0, max_d2 = 0.0, max_i1 = 0.0, max_i2 = 0.0;
  for (int i = 0; i < cfg.probe_points; ++i) {
    Vec4 xp;
    xp << rng.uniform(-1.0, 1.0), rng.uniform_vec3(-std::numbers::pi, std::numbers::pi);
    const Vec4 x = lam_inv * xp;
    const Bivector a = field(x(0), x.tail<3>());
    const Bivector b = transformed(xp(0), xp.tail<3>());
    const cplx ia = bilinear_dot(a, a);
    const cplx ib = bilinear_dot(b, b);
    max_d1 = std::max(max_d1, std::abs(ia.real() - ib.real()));
    max_d2 = std::max(max_d2, std::abs(ia.imag() - ib.imag()));
    max_i1 = std::max(max_i1, std::abs(ib.real()));
    max_i2 = std::max(max_i2, std::abs(ib.imag()));
  }

  write_rsbv(dump_path, sample_on_grid(transformed, cfg.grid_n, cfg.grid_h));
  std::printf("input=plane_wave\n");
  for (const auto& m : transformed.modes())
    std::printf("mode: k=(%.12g,%.12g,%.12g) omega=%.12g |a|=%.12g\n", m.k(0), m.k(1),
                m.k(2), m.omega, m.amplitude.norm());
  std::printf("i1=%.12g i2=%.12g (plane wave: both zero)\n", max_i1, max_i2);
  std::printf("i1_delta=%.12g i2_delta=%.12g over %d matched points\n", max_d1, max_d2,
              cfg.probe_points);
  std::printf("dump=%s\n", dump_path.c_str());
  return 0;
}

int cmd_verify(const std::string& check, std::uint64_t seed, int samples) {
  std::vector<std::string> names;
  if (check == "all") {
    names = check_names();
  } else {
    const auto known = check_names();
    if (std::find(known.begin(), known.end(), check) == known.end())
      throw cli::ConfigError("unknown check: " + check);
    names.push_back(check);
  }

  bool all_pass = true;
  for (const std::string& name : names) {
    const CheckResult r = run_check(name, seed, samples);
    all_pass = all_pass && r.pass;
    std::printf("%s %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str());
    std::printf("%s\n", r.summary_line(seed).c_str());
  }
  return all_pass ? 0 : kExitVerifyFailed;
}

int cmd_dump_info(const std::string& path) {
  const RsbvHeader header = read_rsbv_header(path);
  const FieldGrid grid = read_rsbv(path);
  const InvariantReport inv = invariant_report(grid);
  std::printf("file=%s\n", path.c_str());
  std::printf("version=%u n=%u h=%.17g sites=%zu\n", header.version, header.n, header.h,
              grid.sites());
  std::printf("energy=%.17g\n", inv.energy);
  std::printf("poynting=(%.12g,%.12g,%.12g)\n", inv.poynting(0), inv.poynting(1),
              inv.poynting(2));
  std::printf("i1=%.17g i2=%.17g\n", inv.i1, inv.i2);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemann-Silberstein bivector field toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string check = "all";
  std::string dump_path;
  std::uint64_t seed = 1;
  int samples = 0;
  Overrides ovr;

  CLI::App* sim = app.add_subcommand("simulate", "evolve a field and write dumps/CSV");
  sim->add_option("--config", config_path, "key = value config file")->required();
  sim->add_option("--out", out_dir, "directory prefix for output files");
  sim->add_option("--steps", ovr.steps, "override steps");
  sim->add_option("--dt", ovr.dt, "override dt");
  sim->add_option("--scheme", ovr.scheme, "override scheme (spectral|rk4)");
  sim->add_option("--seed", seed, "run seed (recorded only; runs are deterministic)");

  CLI::App* tr = app.add_subcommand("transform", "apply a restricted Lorentz transformation");
  tr->add_option("--config", config_path, "key = value config file")->required();
  tr->add_option("--out", out_dir, "directory prefix for output files");
  tr->add_option("--seed", seed, "seed for invariant probe points");

  CLI::App* ver = app.add_subcommand("verify", "run no-go and representation certificates");
  ver->add_option("--check", check, "check name or 'all'");
  ver->add_option("--seed", seed, "seed for randomized certificates");
  ver->add_option("--samples", samples, "sample/restart count (0: per-check default)");

  CLI::App* info = app.add_subcommand("dump-info", "print RSBV dump header and invariants");
  info->add_option("file", dump_path, "RSBV dump file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(config_path, out_dir, ovr);
    if (tr->parsed()) return cmd_transform(config_path, out_dir, seed);
    if (ver->parsed()) return cmd_verify(check, seed, samples);
    if (info->parsed()) return cmd_dump_info(dump_path);
  } catch (const cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const blowup_error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return kExitBlowup;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitConfig;
}
