#pragma once

// Subcommands of the `lll` tool. Each writes its data files plus a
// manifest.json into RunConfig::out_dir.

#include <filesystem>
#include <string>
#include <vector>

#include "lll/lll_states.hpp"
#include "lll/quadrature.hpp"
#include "lll/toric_geometry.hpp"

namespace lll::cli {

struct RunConfig {
  SurfaceKind surface = SurfaceKind::Sphere;
  int degree = 4;
  int particles = 2;
  int inverse_filling = 3;
  std::vector<double> s_list = {0.0};
  int grid_points = 1024;
  EvolutionMode evolution = EvolutionMode::Gcst;
  std::filesystem::path out_dir = ".";
  double rel_tol = QuadratureConfig{}.rel_tol;
  int ne_min = 2;
  int ne_max = 40;

  void validate() const;
  QuadratureConfig quadrature() const;
};

/// Shortest decimal that names s in file names: 0, 0.5, 100.
std::string format_s(double s);

std::vector<std::filesystem::path> cmd_geometry(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_laughlin_expand(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_density(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_sfactor(const RunConfig& cfg);

}  // namespace lll::cli
