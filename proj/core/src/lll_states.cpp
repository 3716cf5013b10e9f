#include "lll/lll_states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lll/errors.hpp"

namespace lll {

namespace {

void require_orbital(const SurfaceSpec& surface, int m) {
  if (m < 0 || (surface.kind() == SurfaceKind::Sphere && !surface.is_orbital(m))) {
    throw DomainError("orbital index " + std::to_string(m) + " is outside the polytope");
  }
}

}  // namespace

std::string_view to_string(EvolutionMode mode) {
  return mode == EvolutionMode::Gcst ? "gcst" : "prequantum";
}

EvolutionMode evolution_mode_from_string(std::string_view name) {
  if (name == "gcst") return EvolutionMode::Gcst;
  if (name == "prequantum") return EvolutionMode::Prequantum;
  throw DomainError("unknown evolution mode '" + std::string(name) +
                    "' (expected gcst or prequantum)");
}

double orbital_density_log(const DeformedGeometry& geom, int m, double x) {
  require_orbital(geom.surface(), m);
  // 2 m y - 2 (x y - g) regrouped as 2 (m - x) y + 2 g.
  const double y = geom.log_modulus(x);
  const double g = geom.potential(x);
  return 2.0 * (m - x) * y + 2.0 * g + std::log(geom.metric_coeff(x));
}

double orbital_norm_log(const DeformedGeometry& geom, int m, const QuadratureConfig& cfg) {
  require_orbital(geom.surface(), m);
  const auto f = [&](double x) { return orbital_density_log(geom, m, x); };
  const SurfaceSpec& surface = geom.surface();
  Domain domain = surface.kind() == SurfaceKind::Sphere
                      ? Domain{Interval{surface.lower(), surface.upper()}}
                      : Domain{HalfLine{surface.lower(), m + 2.0}};
  return std::log(2.0 * std::numbers::pi) + integrate_log(f, domain, cfg);
}

double evolution_log_amplitude(EvolutionMode mode, int m, double s) {
  if (!(s >= 0.0)) throw DomainError("deformation time must be non-negative");
  if (mode == EvolutionMode::Prequantum) return 0.0;
  return -0.5 * s * static_cast<double>(m) * m;
}

double asymptotic_norm_ratio(const DeformedGeometry& geom, int m, int n,
                             const QuadratureConfig& cfg) {
  if (m == n) {
    require_orbital(geom.surface(), m);
    return 1.0;
  }
  const double s = geom.s();
  const double damped_m = orbital_norm_log(geom, m, cfg) - s * m * m;
  const double damped_n = orbital_norm_log(geom, n, cfg) - s * n * n;
  return std::exp(damped_m - damped_n);
}

OrbitalNormTable::OrbitalNormTable(const DeformedGeometry& geom, int count,
                                   const QuadratureConfig& cfg)
    : geom_(geom) {
  if (count < 0) throw DomainError("orbital table size must be non-negative");
  norm_logs_.reserve(count);
  for (int m = 0; m < count; ++m) norm_logs_.push_back(orbital_norm_log(geom, m, cfg));
}

double OrbitalNormTable::norm_log(int m) const {
  if (m < 0 || m >= size()) {
    throw DomainError("orbital " + std::to_string(m) + " is not in the norm table");
  }
  return norm_logs_[m];
}

}  // namespace lll
