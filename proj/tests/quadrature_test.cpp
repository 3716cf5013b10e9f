#include "lll/quadrature.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "lll/errors.hpp"
#include "oracles.hpp"

namespace lll {
namespace {

using testing::lanczos_lbeta;
using testing::lanczos_lgamma;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto rule = gauss_legendre(8);
  double sum_w = 0.0;
  double x14 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum_w += rule.weights[i];
    x14 += rule.weights[i] * std::pow(rule.nodes[i], 14);
  }
  EXPECT_NEAR(sum_w, 2.0, 1e-15);
  EXPECT_NEAR(x14, 2.0 / 15.0, 1e-15);
  EXPECT_TRUE(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
}

TEST(LogSumExp, HandlesExtremes) {
  const std::vector<double> v = {1e4, 1e4};
  EXPECT_NEAR(log_sum_exp(v), 1e4 + std::log(2.0), 1e-12);
  EXPECT_EQ(log_sum_exp(std::vector<double>{}), -std::numeric_limits<double>::infinity());
}

TEST(IntegrateLog, ConstantOnUnitInterval) {
  EXPECT_NEAR(integrate_log([](double) { return 0.0; }, Interval{0.0, 1.0}), 0.0, 1e-14);
}

TEST(IntegrateLog, UnitExponentialOnHalfLine) {
  EXPECT_NEAR(integrate_log([](double u) { return -u; }, HalfLine{0.0}), 0.0, 1e-12);
}

TEST(IntegrateLog, BetaSingularEndpoints) {
  const double a = 2.5;
  const double b = 0.5;
  const double n = 4.0;
  const auto f = [&](double u) { return a * std::log(u) + b * std::log(n - u); };
  const double expected = (a + b + 1.0) * std::log(n) + lanczos_lbeta(a + 1.0, b + 1.0);
  EXPECT_NEAR(integrate_log(f, Interval{0.0, n}), expected, 1e-12);
}

class BetaFamily : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(BetaFamily, AgreesWithLogBeta) {
  const auto [a, b] = GetParam();
  const double n = 3.0;
  const auto f = [&](double u) { return a * std::log(u) + b * std::log(n - u); };
  const double expected = (a + b + 1.0) * std::log(n) + lanczos_lbeta(a + 1.0, b + 1.0);
  const double got = integrate_log(f, Interval{0.0, n});
  EXPECT_LE(std::abs(std::expm1(got - expected)), 1e-10) << "a=" << a << " b=" << b;
}

std::vector<std::pair<double, double>> beta_grid() {
  // 20 (alpha, beta) pairs spread over [-0.5, 20]^2.
  const std::vector<double> as = {-0.5, 0.0, 0.5, 1.5, 3.0, 7.5, 12.0, 15.5, 18.0, 20.0};
  const std::vector<double> bs = {20.0, -0.5, 9.5, 0.25, -0.5, 4.0, 0.5, 2.0, 11.0, 6.5};
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < as.size(); ++k) {
    out.emplace_back(as[k], bs[k]);
    out.emplace_back(bs[k], as[(k + 3) % as.size()]);
  }
  return out;
}

INSTANTIATE_TEST_SUITE_P(Grid, BetaFamily, ::testing::ValuesIn(beta_grid()));

TEST(IntegrateLog, GammaOnHalfLine) {
  for (double a : {-0.5, 0.5, 2.0, 5.5, 11.0}) {
    const auto f = [&](double u) { return a * std::log(u) - u; };
    const double got = integrate_log(f, HalfLine{0.0, 1.0});
    EXPECT_LE(std::abs(std::expm1(got - lanczos_lgamma(a + 1.0))), 1e-10) << "a=" << a;
  }
}

TEST(IntegrateLog, HalfLineDoesNotStopBeforeDistantPeak) {
  // Gaussian of width 0.07 centred at 6, invisible from the first segment.
  const double s = 100.0;
  const auto f = [&](double x) { return -s * (x - 6.0) * (x - 6.0); };
  const double got = integrate_log(f, HalfLine{-0.5, 0.5});
  EXPECT_NEAR(got, 0.5 * std::log(std::numbers::pi / s), 1e-10);
}

TEST(IntegrateLog, ScaleEquivariance) {
  const auto base = [](double u) { return 1.5 * std::log(u) + 0.5 * std::log(2.0 - u); };
  const double ref = integrate_log(base, Interval{0.0, 2.0});
  for (double c : {-1e4, -37.0, 0.0, 512.0, 1e4}) {
    const auto shifted = [&](double u) { return base(u) + c; };
    const double got = integrate_log(shifted, Interval{0.0, 2.0});
    EXPECT_NEAR(got - c, ref, 1e-12 * (1.0 + std::abs(c))) << "c=" << c;
  }
}

TEST(IntegrateLog, HugeMagnitudesDoNotOverflow) {
  const auto f = [](double x) { return 3600.0 - 100.0 * (x - 1.0) * (x - 1.0); };
  const double got = integrate_log(f, Interval{-0.5, 3.5});
  EXPECT_NEAR(got, 3600.0 + 0.5 * std::log(std::numbers::pi / 100.0), 1e-10);
}

TEST(IntegrateLog, OrderRefinementAgrees) {
  QuadratureConfig c32;
  QuadratureConfig c64;
  c64.panel_order = 64;
  const auto f = [](double u) { return 0.5 * std::log(u) - 0.5 * std::log(5.0 - u) + u * u; };
  const double r32 = integrate_log(f, Interval{0.0, 5.0}, c32);
  const double r64 = integrate_log(f, Interval{0.0, 5.0}, c64);
  EXPECT_LE(std::abs(std::expm1(r32 - r64)), 10 * c32.rel_tol);
}

TEST(IntegrateLog, ZeroIntegrand) {
  const auto f = [](double) { return -std::numeric_limits<double>::infinity(); };
  EXPECT_EQ(integrate_log(f, Interval{0.0, 1.0}), -std::numeric_limits<double>::infinity());
}

TEST(IntegrateLog, Errors) {
  EXPECT_THROW(integrate_log([](double) { return 0.0; }, Interval{1.0, 1.0}), DomainError);
  EXPECT_THROW(integrate_log([](double) { return 0.0; }, Interval{2.0, 1.0}), DomainError);
  EXPECT_THROW(integrate_log([](double) { return std::nan(""); }, Interval{0.0, 1.0}),
               DomainError);

  QuadratureConfig bad;
  bad.panel_order = 1;
  EXPECT_THROW(integrate_log([](double) { return 0.0; }, Interval{0.0, 1.0}, bad), DomainError);
  bad = {};
  bad.rel_tol = 0.0;
  EXPECT_THROW(bad.validate(), DomainError);

  // log|x - 0.3| has a log singularity inside a panel; with a one-level budget
  // and a tight tolerance refinement must give up.
  QuadratureConfig tight;
  tight.max_subdivisions = 1;
  tight.rel_tol = 1e-15;
  tight.panel_order = 4;
  const auto kink = [](double x) { return -0.9 * std::log(std::abs(x - 0.3)); };
  EXPECT_THROW(integrate_log(kink, Interval{0.0, 1.0}, tight), NonConvergence);
}

}  // namespace
}  // namespace lll
