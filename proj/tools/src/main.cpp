// lll: reproducible data files for lowest-Landau-level states on deformed
// toric surfaces.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lll/errors.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNonConvergence = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace lll;
  cli::RunConfig cfg;
  std::string surface = "sphere";
  std::string evolution = "gcst";
  std::string out_dir = ".";

  CLI::App app{"Lowest-Landau-level states on deformed toric surfaces"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.add_option("--surface", surface, "sphere or plane")
      ->check(CLI::IsMember({"sphere", "plane"}))
      ->capture_default_str();
  app.add_option("--degree", cfg.degree, "orbital count N for geometry")->capture_default_str();
  app.add_option("--particles", cfg.particles, "particle number N_e")->capture_default_str();
  app.add_option("--inverse-filling", cfg.inverse_filling, "Laughlin exponent m (odd)")
      ->capture_default_str();
  app.add_option("--s-list", cfg.s_list, "comma-separated imaginary times")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--grid-points", cfg.grid_points, "grid resolution (>= 16)")
      ->capture_default_str();
  app.add_option("--evolution", evolution, "gcst or prequantum")
      ->check(CLI::IsMember({"gcst", "prequantum"}))
      ->capture_default_str();
  app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  app.add_option("--rel-tol", cfg.rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--ne-min", cfg.ne_min, "first N_e of the sfactor scan")->capture_default_str();
  app.add_option("--ne-max", cfg.ne_max, "last N_e of the sfactor scan")->capture_default_str();

  const auto sub = [&](const char* name, const char* help) {
    return app.add_subcommand(name, help)->fallthrough();
  };
  auto* geometry = sub("geometry", "g_s, y_s, kappa_s, g_s'' and Sc on a grid, per s");
  auto* laughlin = sub("laughlin-expand", "Slater decomposition of the Laughlin state as JSON");
  auto* density = sub("density", "density curves per s and peak ratios");
  auto* sfactor = sub("sfactor", "bunched vs uniform S-factor log ratio over N_e");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    cfg.surface = surface_kind_from_string(surface);
    cfg.evolution = evolution_mode_from_string(evolution);
    cfg.out_dir = out_dir;
    std::vector<std::filesystem::path> written;
    if (geometry->parsed()) written = cli::cmd_geometry(cfg);
    if (laughlin->parsed()) written = cli::cmd_laughlin_expand(cfg);
    if (density->parsed()) written = cli::cmd_density(cfg);
    if (sfactor->parsed()) written = cli::cmd_sfactor(cfg);
    for (const auto& path : written) std::cout << path.string() << '\n';
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
