#pragma once

// One-particle lowest-Landau-level orbitals sigma_s^m = w_s^m sigma_{P,s} (x) sqrt(dz_s).
//
// Sections are never represented directly; everything goes through the
// theta-independent pointwise density
//
//   h_s^m(x) = exp(2 m y_s(x) - 2 kappa_s(x)) g_s''(x)
//
// and its L^2 norm 2 pi \int_P h_s^m dx (the angular integral is exact).

#include <string_view>
#include <vector>

#include "lll/quadrature.hpp"
#include "lll/toric_geometry.hpp"

namespace lll {

enum class EvolutionMode { Gcst, Prequantum };

std::string_view to_string(EvolutionMode mode);
EvolutionMode evolution_mode_from_string(std::string_view name);

/// log h_s^m(x). Throws DomainError for x outside the open polytope or an
/// invalid orbital index.
double orbital_density_log(const DeformedGeometry& geom, int m, double x);

/// log ||sigma_s^m||^2_{L^2}.
double orbital_norm_log(const DeformedGeometry& geom, int m,
                        const QuadratureConfig& cfg = {});

/// Log of the scalar multiplying sigma_s^m when sigma_0^m is evolved:
/// -s m^2 / 2 for the coherent state transform, 0 for prequantum evolution.
double evolution_log_amplitude(EvolutionMode mode, int m, double s);

/// exp[(log||sigma^m||^2 - s m^2) - (log||sigma^n||^2 - s n^2)], which tends to
/// exp(2 g(m) - 2 g(n)) as s grows.
double asymptotic_norm_ratio(const DeformedGeometry& geom, int m, int n,
                             const QuadratureConfig& cfg = {});

/// Orbital norms for m = 0..count-1, computed once at construction and
/// read-only afterwards, so a table may be shared between threads.
class OrbitalNormTable {
 public:
  OrbitalNormTable(const DeformedGeometry& geom, int count,
                   const QuadratureConfig& cfg = {});

  const DeformedGeometry& geometry() const { return geom_; }
  int size() const { return static_cast<int>(norm_logs_.size()); }

  /// log ||sigma_s^m||^2; throws DomainError if m is not in the table.
  double norm_log(int m) const;

 private:
  DeformedGeometry geom_;
  std::vector<double> norm_logs_;
};

}  // namespace lll
