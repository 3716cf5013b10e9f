#include "lll/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lll/errors.hpp"

namespace lll {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxPanels = 1u << 16;
constexpr int kMaxDoublings = 128;

// How a panel's parameter t maps to x.
enum class Chart { Plain, FromLower, FromUpper };

struct Panel {
  Chart chart;
  double anchor;  // endpoint for the t^2 charts
  double t0, t1;
  int depth;
  double coarse;  // log of the one-panel rule
  double value;   // log of the two-half rule
  double error;   // log of |coarse - value|
  double position;  // smallest x covered, for ordering the final sum
};

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log |e^a - e^b|
double log_abs_diff(double a, double b) {
  if (a == b) return kNegInf;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (lo == kNegInf) return hi;
  return hi + std::log(-std::expm1(lo - hi));
}

class PanelIntegrator {
 public:
  PanelIntegrator(const LogIntegrand& f, const QuadratureConfig& cfg)
      : f_(f), rule_(gauss_legendre(cfg.panel_order)) {
    log_weights_.reserve(rule_.weights.size());
    for (double w : rule_.weights) log_weights_.push_back(std::log(w));
    scratch_.resize(rule_.nodes.size());
  }

  // log of the rule applied on [t0, t1] in the given chart.
  double rule(Chart chart, double anchor, double t0, double t1) {
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t1 + t0);
    const double log_half = std::log(half);
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double t = mid + half * rule_.nodes[i];
      double x = t;
      double log_jac = 0.0;
      if (chart != Chart::Plain) {
        x = chart == Chart::FromLower ? anchor + t * t : anchor - t * t;
        // Jacobian from the offset x actually realises, so rounding of t^2
        // near the anchor does not show up as integrand noise.
        const double offset = std::abs(x - anchor);
        if (offset == 0.0) {
          scratch_[i] = -std::numeric_limits<double>::infinity();
          continue;
        }
        log_jac = std::log(2.0) + 0.5 * std::log(offset);
      }
      const double fx = f_(x);
      if (std::isnan(fx) || fx == std::numeric_limits<double>::infinity()) {
        throw DomainError("log-integrand is not finite at x = " + std::to_string(x));
      }
      scratch_[i] = fx + log_jac + log_weights_[i] + log_half;
    }
    return log_sum_exp(scratch_);
  }

  Panel make_panel(Chart chart, double anchor, double t0, double t1, int depth,
                   double coarse) {
    const double tm = 0.5 * (t0 + t1);
    const double left = rule(chart, anchor, t0, tm);
    const double right = rule(chart, anchor, tm, t1);
    Panel p{chart, anchor, t0, t1, depth, coarse, log_add(left, right), 0.0, 0.0};
    p.error = log_abs_diff(p.coarse, p.value);
    p.position = lowest_x(p);
    return p;
  }

  Panel make_panel(Chart chart, double anchor, double t0, double t1) {
    return make_panel(chart, anchor, t0, t1, 0, rule(chart, anchor, t0, t1));
  }

  std::pair<Panel, Panel> split(const Panel& p) {
    const double tm = 0.5 * (p.t0 + p.t1);
    // The parent's halves become the children's coarse estimates.
    const double left = rule(p.chart, p.anchor, p.t0, tm);
    const double right = rule(p.chart, p.anchor, tm, p.t1);
    return {make_panel(p.chart, p.anchor, p.t0, tm, p.depth + 1, left),
            make_panel(p.chart, p.anchor, tm, p.t1, p.depth + 1, right)};
  }

 private:
  static double lowest_x(const Panel& p) {
    switch (p.chart) {
      case Chart::Plain: return p.t0;
      case Chart::FromLower: return p.anchor + p.t0 * p.t0;
      case Chart::FromUpper: return p.anchor - p.t1 * p.t1;
    }
    return p.t0;
  }

  const LogIntegrand& f_;
  GaussLegendreRule rule_;
  std::vector<double> log_weights_;
  std::vector<double> scratch_;
};

// Adaptive integral over [a, b]. Refinement stops once the summed error is
// below rel_tol times max(result, e^floor_log).
double integrate_segment(const LogIntegrand& f, double a, double b, bool chart_lower,
                         bool chart_upper, const QuadratureConfig& cfg,
                         double floor_log) {
  PanelIntegrator integrator(f, cfg);

  const double len = b - a;
  int n0 = static_cast<int>(std::ceil(len / cfg.initial_panel_width));
  n0 = std::max(n0, (chart_lower && chart_upper) ? 2 : 1);
  const double h = len / n0;

  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(n0) * 4);
  for (int k = 0; k < n0; ++k) {
    const double x0 = a + h * k;
    const double x1 = (k + 1 == n0) ? b : a + h * (k + 1);
    if (k == 0 && chart_lower) {
      panels.push_back(integrator.make_panel(Chart::FromLower, a, 0.0, std::sqrt(x1 - a)));
    } else if (k + 1 == n0 && chart_upper) {
      panels.push_back(integrator.make_panel(Chart::FromUpper, b, 0.0, std::sqrt(b - x0)));
    } else {
      panels.push_back(integrator.make_panel(Chart::Plain, 0.0, x0, x1));
    }
  }

  const double log_tol = std::log(cfg.rel_tol);
  std::vector<double> buf;
  for (;;) {
    buf.clear();
    for (const auto& p : panels) buf.push_back(p.value);
    const double total = log_sum_exp(buf);
    buf.clear();
    for (const auto& p : panels) buf.push_back(p.error);
    const double err = log_sum_exp(buf);

    if (err == kNegInf || err <= log_tol + std::max(total, floor_log)) break;

    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& l, const Panel& r) { return l.error < r.error; });
    if (worst->depth >= cfg.max_subdivisions || panels.size() >= kMaxPanels) {
      throw NonConvergence("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                           "] did not reach rel_tol " + std::to_string(cfg.rel_tol) +
                           " (relative error estimate " + std::to_string(std::exp(err - total)) +
                           ")");
    }
    auto [left, right] = integrator.split(*worst);
    *worst = left;
    panels.push_back(right);
  }

  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.position < r.position; });
  buf.clear();
  for (const auto& p : panels) buf.push_back(p.value);
  return log_sum_exp(buf);
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw DomainError("rel_tol must be positive");
  }
  if (panel_order < 2) throw DomainError("panel_order must be at least 2");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be at least 1");
  if (!(initial_panel_width > 0.0)) throw DomainError("initial_panel_width must be positive");
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      dp = n * (z * p1 - p2) / (z * z - 1.0);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    dp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double log_sum_exp(std::span<const double> values) {
  double hi = kNegInf;
  for (double v : values) hi = std::max(hi, v);
  if (hi == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - hi);
  return hi + std::log(sum);
}

double integrate_log(const LogIntegrand& f_log, const Domain& domain,
                     const QuadratureConfig& cfg) {
  cfg.validate();

  if (const auto* iv = std::get_if<Interval>(&domain)) {
    if (!std::isfinite(iv->lower) || !std::isfinite(iv->upper) || !(iv->lower < iv->upper)) {
      throw DomainError("empty or unbounded interval");
    }
    return integrate_segment(f_log, iv->lower, iv->upper, true, true, cfg, kNegInf);
  }

  const auto& hl = std::get<HalfLine>(domain);
  if (!std::isfinite(hl.lower) || !(hl.initial_extent > 0.0) ||
      !std::isfinite(hl.initial_extent)) {
    throw DomainError("half-line needs a finite lower limit and positive initial extent");
  }
  const double log_tol = std::log(cfg.rel_tol);
  double upper = hl.lower + hl.initial_extent;
  double running = integrate_segment(f_log, hl.lower, upper, true, false, cfg, kNegInf);
  for (int k = 0; k < kMaxDoublings; ++k) {
    const double next = hl.lower + 2.0 * (upper - hl.lower);
    const double piece = integrate_segment(f_log, upper, next, false, false, cfg, running);
    running = log_add(running, piece);
    const bool negligible = piece == kNegInf || piece <= log_tol + running;
    // Guard against stopping in front of a peak that has not been reached yet.
    const double probe = next - 1e-3 * (next - upper);
    const bool decaying = f_log(next) <= f_log(probe);
    upper = next;
    if (negligible && decaying) return running;
  }
  throw NonConvergence("half-line tail did not become negligible after " +
                       std::to_string(kMaxDoublings) + " doublings");
}

}  // namespace lll
