#pragma once

// Density profiles of Slater-decomposed many-body states on a deformed
// surface, and their large-s limits.
//
// With Slater weights w_lambda (squared amplitudes times orbital norms) the
// one-body density per unit x is
//
//   rho_s(x) = sum_lambda w_lambda sum_j 2 pi h_s^{lambda_j}(x) / ||sigma_s^{lambda_j}||^2
//              / sum_lambda w_lambda,
//
// which integrates to the particle number. All lambda sums run in log space.

#include <map>
#include <utility>
#include <vector>

#include "lll/laughlin_expansion.hpp"
#include "lll/lll_states.hpp"
#include "lll/quadrature.hpp"
#include "lll/toric_geometry.hpp"

namespace lll {

/// Per-lambda log-weights log(|a_lambda|^2 e^{-s sum lambda_i^2} prod ||sigma^{lambda_i}||^2)
/// (the damping factor is present only for the coherent state transform).
struct WeightLedger {
  SurfaceSpec surface;
  double s;
  EvolutionMode mode;
  /// Sorted lexicographically by lambda.
  std::vector<std::pair<SlaterIndex, double>> entries;
};

struct DensityCurve {
  std::vector<double> xs;
  std::vector<double> rhos;
  double s;
  EvolutionMode mode;
  int particles;
};

/// Smallest surface holding every level of a 1/m Laughlin state: N = m (Ne - 1) + 1.
SurfaceSpec laughlin_surface(SurfaceKind kind, int particles, int inverse_filling);

WeightLedger slater_weights(const LaughlinExpansion& exp, const OrbitalNormTable& norms,
                            EvolutionMode mode);
WeightLedger slater_weights(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                            EvolutionMode mode, const QuadratureConfig& cfg = {});

/// rho_s as a callable. Lambda sums are collapsed once into per-orbital
/// occupations n_p = sum_{lambda containing p} w_lambda / sum_lambda w_lambda,
/// so evaluation costs one orbital density per occupied level.
class DensityProfile {
 public:
  DensityProfile(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                 EvolutionMode mode, const QuadratureConfig& cfg = {});
  DensityProfile(const WeightLedger& ledger, const OrbitalNormTable& norms);

  const DeformedGeometry& geometry() const { return geom_; }
  EvolutionMode mode() const { return mode_; }
  int particles() const { return particles_; }
  /// log n_p for each occupied level p, ascending in p.
  const std::vector<std::pair<int, double>>& occupation_logs() const { return occupation_; }
  int top_level() const { return occupation_.empty() ? 0 : occupation_.back().first; }

  double log_density(double x) const;
  double operator()(double x) const;

 private:
  void build(const WeightLedger& ledger, const OrbitalNormTable& norms);

  DeformedGeometry geom_;
  EvolutionMode mode_;
  int particles_ = 0;
  std::vector<std::pair<int, double>> occupation_;
  // log(2 pi) - log ||sigma^p||^2, aligned with occupation_.
  std::vector<double> normalizers_;
};

DensityCurve density(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                     EvolutionMode mode, const std::vector<double>& grid,
                     const QuadratureConfig& cfg = {});
DensityCurve sample(const DensityProfile& profile, const std::vector<double>& grid);

/// \int_P rho dx by adaptive quadrature; equals the particle number.
double density_mass(const DensityProfile& profile, const QuadratureConfig& cfg = {});
/// \int_P |rho_a - rho_b| dx. Both profiles must live on the same surface.
double l1_distance(const DensityProfile& a, const DensityProfile& b,
                   const QuadratureConfig& cfg = {});
/// Trapezoid rule over the curve's own grid.
double trapezoid_mass(const DensityCurve& curve);

/// Delta-comb weights of the s -> infinity limit, keyed by integer point;
/// they sum to the particle number.
std::map<int, double> limit_weights(const LaughlinExpansion& exp, const SurfaceSpec& surface);

/// Limiting peak ratio R_{p,q}. Throws EmptySupport if q is unoccupied.
double peak_ratio_analytic(const LaughlinExpansion& exp, const SurfaceSpec& surface, int p,
                           int q);
/// rho(p) / rho(q) read off the curve at exact integer abscissae. Throws
/// GridError if either point is missing and EmptySupport if rho(q) is zero.
double peak_ratio_empirical(const DensityCurve& curve, int p, int q);

/// The lambda with largest sum of squares; ties go to the lexicographically smallest.
SlaterIndex dominant_slater(const LaughlinExpansion& exp);

struct SFactorRow {
  int particles;
  double log_ratio;
};

/// log(|a_{bunched}|^2 S(bunched) / |a_{uniform}|^2 S(uniform)) for each Ne in
/// [ne_min, ne_max], using |a_{bunched}| = (2 Ne - 1)!! and |a_{uniform}| = 1.
std::vector<SFactorRow> sfactor_scan(SurfaceKind kind, int ne_min, int ne_max,
                                     int inverse_filling = 3);

/// Ascending grid over the open polytope that contains every integer orbital
/// point. Sphere: `points` steps across (-1/2, N - 1/2). Plane: `points` steps
/// across (-1/2, -1/2 + plane_extent].
std::vector<double> polytope_grid(const SurfaceSpec& surface, int points, double plane_extent);

}  // namespace lll
