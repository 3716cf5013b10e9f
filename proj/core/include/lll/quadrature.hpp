#pragma once

// Log-space adaptive Gauss-Legendre quadrature.
//
// Integrands are supplied as their logarithm and results are returned as the
// logarithm of the integral, so magnitudes like e^{+-10^4} never overflow.
// Finite endpoints are treated with the substitution x = endpoint +- t^2 on
// the boundary panels, which turns integrable power-law singularities with
// half-integer exponents into smooth integrands.

#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace lll {

struct QuadratureConfig {
  double rel_tol = 1e-12;
  /// Maximum bisection depth of any single panel.
  int max_subdivisions = 60;
  /// Gauss-Legendre nodes per panel.
  int panel_order = 32;
  /// Initial panels are no wider than this (in units of x).
  double initial_panel_width = 0.25;

  /// Throws DomainError on an invalid configuration.
  void validate() const;
};

/// Closed interval [lower, upper]; both ends get the t^2 substitution.
struct Interval {
  double lower;
  double upper;
};

/// Half-line [lower, inf). The first segment is [lower, lower + initial_extent];
/// the upper limit then doubles until the newest segment is negligible.
struct HalfLine {
  double lower;
  double initial_extent = 1.0;
};

using Domain = std::variant<Interval, HalfLine>;

using LogIntegrand = std::function<double(double)>;

/// log of the integral of exp(f_log) over the domain.
///
/// f_log may return -inf (zero integrand) but never NaN or +inf.
/// Throws NonConvergence when refinement exhausts max_subdivisions, and
/// DomainError for an empty or malformed domain.
double integrate_log(const LogIntegrand& f_log, const Domain& domain,
                     const QuadratureConfig& cfg = {});

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Numerically stable log(sum(exp(v))). Returns -inf for an empty span.
double log_sum_exp(std::span<const double> values);

}  // namespace lll
