#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "lll/errors.hpp"

namespace lll::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("lll_cli_") + info->name());
    fs::remove_all(dir_);
    cfg_.out_dir = dir_;
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Rows of a CSV as numbers, header dropped.
  static std::vector<std::vector<double>> rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> out;
    while (std::getline(in, line)) {
      std::vector<double> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
      out.push_back(row);
    }
    return out;
  }

  int run(const std::string& args) const {
    const std::string cmd = std::string(LLL_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  fs::path dir_;
  RunConfig cfg_;
};

TEST(FormatS, ShortestRoundTrip) {
  EXPECT_EQ(format_s(0.0), "0");
  EXPECT_EQ(format_s(0.5), "0.5");
  EXPECT_EQ(format_s(100.0), "100");
  EXPECT_EQ(format_s(0.1), "0.1");
}

TEST_F(CliTest, GeometryPlaneFlatAndCurved) {
  cfg_.surface = SurfaceKind::Plane;
  cfg_.s_list = {0.0, 1.0};
  cmd_geometry(cfg_);
  EXPECT_EQ(slurp(dir_ / "geometry_s0.csv").substr(0, 25), "x,g_s,y_s,kappa_s,gpp,Sc\n");
  for (const auto& r : rows(dir_ / "geometry_s0.csv")) EXPECT_EQ(r[5], 0.0);
  bool found = false;
  for (const auto& r : rows(dir_ / "geometry_s1.csv")) {
    if (r[0] == 0.5) {
      found = true;
      EXPECT_NEAR(r[5], 8.0 / 27.0, 1e-15);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(fs::exists(dir_ / "manifest.json"));
}

TEST_F(CliTest, GeometrySphereRound) {
  cfg_.degree = 4;
  cmd_geometry(cfg_);
  const auto r = rows(dir_ / "geometry_s0.csv");
  EXPECT_GE(r.size(), 1000u);
  for (const auto& row : r) EXPECT_NEAR(row[5], 1.0, 1e-12);
}

TEST_F(CliTest, LaughlinExpandWritesSortedTerms) {
  cfg_.particles = 2;
  cmd_laughlin_expand(cfg_);
  const auto doc = json::parse(slurp(dir_ / "laughlin_Ne2_m3.json"));
  ASSERT_EQ(doc["terms"].size(), 2u);
  EXPECT_EQ(doc["terms"][0]["coeff"], "1");
  EXPECT_EQ(doc["terms"][1]["coeff"], "-3");

  cfg_.particles = 3;
  cfg_.inverse_filling = 1;
  cmd_laughlin_expand(cfg_);
  EXPECT_EQ(json::parse(slurp(dir_ / "laughlin_Ne3_m1.json"))["terms"].size(), 1u);
}

TEST_F(CliTest, DensityRatiosAndManifest) {
  cfg_.particles = 2;
  cfg_.s_list = {0.0, 100.0};
  cmd_density(cfg_);
  const auto ratios = json::parse(slurp(dir_ / "ratios.json"));
  EXPECT_NEAR(ratios["analytic"][0]["R"].get<double>(), 1.08, 0.01);
  const double emp = ratios["empirical"][1]["ratios"][0]["R"].get<double>();
  EXPECT_NEAR(emp / 1.0845, 1.0, 0.02);

  const auto manifest = json::parse(slurp(dir_ / "manifest.json"));
  EXPECT_EQ(manifest["command"], "density");
  EXPECT_EQ(manifest["config"]["s_list"], json({0.0, 100.0}));
  for (const auto& f : manifest["files"]) {
    if (!f.contains("quadrature_mass")) continue;
    EXPECT_NEAR(f["quadrature_mass"].get<double>(), 2.0, 1e-8);
  }
  const auto csv = dir_ / "density_sphere_Ne2_gcst_s100.csv";
  EXPECT_EQ(slurp(csv).substr(0, 6), "x,rho\n");
}

TEST_F(CliTest, DensityPlaneHalfFilling) {
  cfg_.surface = SurfaceKind::Plane;
  cfg_.particles = 3;
  cfg_.s_list = {100.0};
  cmd_density(cfg_);
  const auto ratios = json::parse(slurp(dir_ / "ratios.json"));
  EXPECT_NEAR(ratios["empirical"][0]["ratios"][1]["R"].get<double>(), 0.50, 0.01);
}

TEST_F(CliTest, DeterministicOutput) {
  cfg_.particles = 3;
  cfg_.s_list = {5.0};
  cmd_density(cfg_);
  const auto first = slurp(dir_ / "density_sphere_Ne3_gcst_s5.csv");
  const auto manifest = slurp(dir_ / "manifest.json");
  cmd_density(cfg_);
  EXPECT_EQ(slurp(dir_ / "density_sphere_Ne3_gcst_s5.csv"), first);
  EXPECT_EQ(slurp(dir_ / "manifest.json"), manifest);
}

TEST_F(CliTest, SFactorEventuallyDecreases) {
  for (auto kind : {SurfaceKind::Sphere, SurfaceKind::Plane}) {
    cfg_.surface = kind;
    cmd_sfactor(cfg_);
    const auto r = rows(dir_ / (std::string("sfactor_") + std::string(to_string(kind)) + ".csv"));
    ASSERT_EQ(r.size(), 39u);
    EXPECT_EQ(r.front()[0], 2.0);
    EXPECT_TRUE(std::isfinite(r.front()[1]));
    for (std::size_t k = 10; k < r.size(); ++k) EXPECT_LT(r[k][1], r[k - 1][1]);
  }
}

TEST_F(CliTest, ValidationErrors) {
  cfg_.grid_points = 8;
  EXPECT_THROW(cmd_density(cfg_), DomainError);
  cfg_ = {};
  cfg_.s_list = {};
  EXPECT_THROW(cmd_geometry(cfg_), DomainError);
  cfg_ = {};
  cfg_.ne_max = 41;
  EXPECT_THROW(cmd_sfactor(cfg_), DomainError);
}

TEST_F(CliTest, BinaryExitCodes) {
  const std::string out = " --out-dir " + dir_.string();
  EXPECT_EQ(run("laughlin-expand --particles 2" + out), 0);
  EXPECT_EQ(run("density --grid-points 4" + out), 2);
  EXPECT_EQ(run("density --surface torus" + out), 2);
  EXPECT_EQ(run("laughlin-expand --inverse-filling 2" + out), 2);
  EXPECT_EQ(run("laughlin-expand --particles 9" + out), 2);
  EXPECT_EQ(run("geometry --out-dir /proc/lll_no_such_dir"), 1);
  EXPECT_EQ(run("nosuchcommand"), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
  fs::create_directories(dir_);
  const auto ini = dir_ / "run.ini";
  std::ofstream(ini) << "surface=plane\nparticles=3\ns-list=0,5\ngrid-points=32\n";
  ASSERT_EQ(run("density --config " + ini.string() + " --s-list 2 --out-dir " + dir_.string()), 0);
  const auto config = json::parse(slurp(dir_ / "manifest.json"))["config"];
  EXPECT_EQ(config["surface"], "plane");
  EXPECT_EQ(config["particles"], 3);
  EXPECT_EQ(config["grid_points"], 32);
  EXPECT_EQ(config["s_list"], json({2.0}));
}

}  // namespace
}  // namespace lll::cli
