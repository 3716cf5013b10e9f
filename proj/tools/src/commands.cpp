#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include <nlohmann/json.hpp>

#include "lll/errors.hpp"
#include "lll/laughlin_expansion.hpp"
#include "lll/many_body_density.hpp"

#ifndef LLL_VERSION
#define LLL_VERSION "0.0.0"
#endif

namespace lll::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kMaxScanParticles = 40;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::vector<std::string>& header) : out_(path) {
    if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    row_strings(header);
  }

  void row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(fmt17(v));
    row_strings(cells);
  }

  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }

  void close() {
    out_.close();
    if (!out_) throw IoError("write failed");
  }

 private:
  std::ofstream out_;
};

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

json config_echo(const RunConfig& cfg) {
  return {{"surface", to_string(cfg.surface)},
          {"degree", cfg.degree},
          {"particles", cfg.particles},
          {"inverse_filling", cfg.inverse_filling},
          {"s_list", cfg.s_list},
          {"grid_points", cfg.grid_points},
          {"evolution", to_string(cfg.evolution)},
          {"out_dir", cfg.out_dir.string()},
          {"rel_tol", cfg.rel_tol},
          {"ne_min", cfg.ne_min},
          {"ne_max", cfg.ne_max}};
}

fs::path write_manifest(const RunConfig& cfg, const std::string& command, const json& files) {
  const json doc = {{"tool", "lll"},
                    {"version", LLL_VERSION},
                    {"command", command},
                    {"config", config_echo(cfg)},
                    {"files", files}};
  const fs::path path = cfg.out_dir / "manifest.json";
  write_json(path, doc);
  return path;
}

SurfaceSpec make_surface(SurfaceKind kind, int n) {
  return kind == SurfaceKind::Sphere ? SurfaceSpec::sphere(n) : SurfaceSpec::plane(n);
}

// Tail room for plane densities: s = 0 Gamma orbitals reach well beyond the top level.
double plane_density_extent(const SurfaceSpec& surface) { return 2.0 * surface.orbital_count() + 10.0; }

json ratio_entry(int p, int q, std::optional<double> r) {
  json e = {{"p", p}, {"q", q}};
  e["R"] = r ? json(*r) : json(nullptr);
  return e;
}

}  // namespace

void RunConfig::validate() const {
  if (degree < 1) throw DomainError("--degree must be at least 1");
  if (particles < 1) throw DomainError("--particles must be at least 1");
  if (inverse_filling < 1 || inverse_filling % 2 == 0) {
    throw DomainError("--inverse-filling must be a positive odd integer");
  }
  if (s_list.empty()) throw DomainError("--s-list must not be empty");
  for (double s : s_list) {
    if (!std::isfinite(s) || s < 0.0) throw DomainError("--s-list values must be finite and >= 0");
  }
  if (grid_points < 16) throw DomainError("--grid-points must be at least 16");
  if (ne_min < 2 || ne_max < ne_min || ne_max > kMaxScanParticles) {
    throw DomainError("--ne-min/--ne-max must satisfy 2 <= ne-min <= ne-max <= 40");
  }
  quadrature().validate();
}

QuadratureConfig RunConfig::quadrature() const {
  QuadratureConfig q;
  q.rel_tol = rel_tol;
  return q;
}

std::string format_s(double s) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, s);
  return std::string(buf, res.ptr);
}

std::vector<fs::path> cmd_geometry(const RunConfig& cfg) {
  cfg.validate();
  prepare_out_dir(cfg.out_dir);
  const SurfaceSpec surface = make_surface(cfg.surface, cfg.degree);
  auto grid = polytope_grid(surface, cfg.grid_points, static_cast<double>(cfg.degree));
  // Half-integer points too, so closed forms at x = 1/2 can be read off directly.
  for (int j = 0; j + 1 < cfg.degree; ++j) grid.push_back(j + 0.5);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<fs::path> written;
  json files = json::array();
  for (double s : cfg.s_list) {
    const DeformedGeometry geom(surface, s);
    const std::string name = "geometry_s" + format_s(s) + ".csv";
    CsvWriter csv(cfg.out_dir / name, {"x", "g_s", "y_s", "kappa_s", "gpp", "Sc"});
    for (double x : grid) {
      csv.row({x, geom.potential(x), geom.log_modulus(x), geom.kahler_potential(x),
               geom.metric_coeff(x), geom.scalar_curvature(x)});
    }
    csv.close();
    written.push_back(cfg.out_dir / name);
    files.push_back({{"name", name}, {"s", s}, {"rows", grid.size()}});
  }
  written.push_back(write_manifest(cfg, "geometry", files));
  return written;
}

std::vector<fs::path> cmd_laughlin_expand(const RunConfig& cfg) {
  cfg.validate();
  prepare_out_dir(cfg.out_dir);
  const auto e = expand(cfg.particles, cfg.inverse_filling);
  const std::string name = "laughlin_Ne" + std::to_string(cfg.particles) + "_m" +
                           std::to_string(cfg.inverse_filling) + ".json";
  write_json(cfg.out_dir / name, e.to_json());
  const json files = json::array({{{"name", name}, {"terms", e.terms().size()}}});
  return {cfg.out_dir / name, write_manifest(cfg, "laughlin-expand", files)};
}

std::vector<fs::path> cmd_density(const RunConfig& cfg) {
  cfg.validate();
  prepare_out_dir(cfg.out_dir);
  const auto e = expand(cfg.particles, cfg.inverse_filling);
  const SurfaceSpec surface = laughlin_surface(cfg.surface, cfg.particles, cfg.inverse_filling);
  const auto grid = polytope_grid(surface, cfg.grid_points, plane_density_extent(surface));
  const QuadratureConfig qcfg = cfg.quadrature();
  const int top = cfg.inverse_filling * (cfg.particles - 1);
  const std::string mode(to_string(cfg.evolution));

  json analytic = json::array();
  for (int p = 0; p < top; ++p) {
    std::optional<double> r;
    try {
      r = peak_ratio_analytic(e, surface, p, p + 1);
    } catch (const EmptySupport&) {
    }
    analytic.push_back(ratio_entry(p, p + 1, r));
  }

  std::vector<fs::path> written;
  json files = json::array();
  json empirical = json::array();
  for (double s : cfg.s_list) {
    const DeformedGeometry geom(surface, s);
    const DensityProfile profile(e, geom, cfg.evolution, qcfg);
    const DensityCurve curve = sample(profile, grid);
    const std::string name = "density_" + std::string(to_string(cfg.surface)) + "_Ne" +
                             std::to_string(cfg.particles) + "_" + mode + "_s" + format_s(s) +
                             ".csv";
    CsvWriter csv(cfg.out_dir / name, {"x", "rho"});
    for (std::size_t i = 0; i < curve.xs.size(); ++i) csv.row({curve.xs[i], curve.rhos[i]});
    csv.close();
    written.push_back(cfg.out_dir / name);

    json ratios = json::array();
    for (int p = 0; p < top; ++p) {
      std::optional<double> r;
      try {
        r = peak_ratio_empirical(curve, p, p + 1);
      } catch (const EmptySupport&) {
      }
      ratios.push_back(ratio_entry(p, p + 1, r));
    }
    empirical.push_back({{"s", s}, {"ratios", ratios}});
    files.push_back({{"name", name},
                     {"s", s},
                     {"rows", curve.xs.size()},
                     {"quadrature_mass", density_mass(profile, qcfg)},
                     {"trapezoid_mass", trapezoid_mass(curve)}});
  }

  const json ratio_doc = {{"surface", to_string(cfg.surface)},
                          {"particles", cfg.particles},
                          {"inverse_filling", cfg.inverse_filling},
                          {"orbitals", surface.orbital_count()},
                          {"evolution", mode},
                          {"analytic", analytic},
                          {"empirical", empirical}};
  write_json(cfg.out_dir / "ratios.json", ratio_doc);
  written.push_back(cfg.out_dir / "ratios.json");
  files.push_back({{"name", "ratios.json"}});
  written.push_back(write_manifest(cfg, "density", files));
  return written;
}

std::vector<fs::path> cmd_sfactor(const RunConfig& cfg) {
  cfg.validate();
  prepare_out_dir(cfg.out_dir);
  const auto rows = sfactor_scan(cfg.surface, cfg.ne_min, cfg.ne_max, cfg.inverse_filling);
  const std::string name = "sfactor_" + std::string(to_string(cfg.surface)) + ".csv";
  CsvWriter csv(cfg.out_dir / name, {"N_e", "log_ratio"});
  for (const auto& r : rows) csv.row_strings({std::to_string(r.particles), fmt17(r.log_ratio)});
  csv.close();
  const json files = json::array({{{"name", name}, {"rows", rows.size()}}});
  return {cfg.out_dir / name, write_manifest(cfg, "sfactor", files)};
}

}  // namespace lll::cli
