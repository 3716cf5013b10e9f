#include "lll/toric_geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lll/errors.hpp"

namespace lll {

namespace {

// Distances of x to the two facets, u = x + 1/2 and v = N - u.
struct FacetDistances {
  double u;
  double v;
};

FacetDistances facet_distances(const SurfaceSpec& surface, double x) {
  const double u = x - SurfaceSpec::kBoundaryOffset;
  const double v = surface.kind() == SurfaceKind::Sphere
                       ? static_cast<double>(surface.orbital_count()) - u
                       : std::numeric_limits<double>::infinity();
  return {u, v};
}

std::string describe(double x) { return std::to_string(x); }

}  // namespace

std::string_view to_string(SurfaceKind kind) {
  return kind == SurfaceKind::Sphere ? "sphere" : "plane";
}

SurfaceKind surface_kind_from_string(std::string_view name) {
  if (name == "sphere") return SurfaceKind::Sphere;
  if (name == "plane") return SurfaceKind::Plane;
  throw DomainError("unknown surface '" + std::string(name) +
                    "' (expected sphere or plane)");
}

SurfaceSpec SurfaceSpec::sphere(int orbital_count) {
  if (orbital_count < 1) {
    throw DomainError("sphere needs at least one orbital");
  }
  return {SurfaceKind::Sphere, orbital_count};
}

SurfaceSpec SurfaceSpec::plane(int orbital_count) {
  if (orbital_count < 1) {
    throw DomainError("plane orbital cap must be positive");
  }
  return {SurfaceKind::Plane, orbital_count};
}

double SurfaceSpec::upper() const {
  if (kind_ == SurfaceKind::Plane) return std::numeric_limits<double>::infinity();
  return kBoundaryOffset + orbital_count_;
}

double SurfaceSpec::length() const { return upper() - lower(); }

bool SurfaceSpec::contains(double x) const {
  return std::isfinite(x) && x > lower() && x < upper();
}

bool SurfaceSpec::is_orbital(int m) const {
  return m >= 0 && m < orbital_count_;
}

DeformedGeometry::DeformedGeometry(SurfaceSpec surface, double s)
    : surface_(surface), s_(s) {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw DomainError("deformation time must be finite and non-negative, got " +
                      describe(s));
  }
}

void DeformedGeometry::require_interior(double x) const {
  if (!surface_.contains(x)) {
    throw DomainError("x = " + describe(x) + " is not in the open polytope of the " +
                      std::string(to_string(surface_.kind())));
  }
}

double canonical_potential(const SurfaceSpec& surface, double x) {
  if (!surface.contains(x)) {
    throw DomainError("x = " + describe(x) + " is not in the open polytope");
  }
  const auto [u, v] = facet_distances(surface, x);
  if (surface.kind() == SurfaceKind::Sphere) {
    return 0.5 * (u * std::log(u) + v * std::log(v));
  }
  return 0.5 * u * std::log(2.0 * u) - 0.5 * x;
}

double DeformedGeometry::potential(double x) const {
  return canonical_potential(surface_, x) + 0.5 * s_ * x * x;
}

double DeformedGeometry::log_modulus(double x) const {
  require_interior(x);
  const auto [u, v] = facet_distances(surface_, x);
  const double y0 = surface_.kind() == SurfaceKind::Sphere
                        ? 0.5 * (std::log(u) - std::log(v))
                        : 0.5 * std::log(2.0 * u);
  return y0 + s_ * x;
}

double DeformedGeometry::kahler_potential(double x) const {
  return x * log_modulus(x) - potential(x);
}

double DeformedGeometry::metric_coeff(double x) const {
  require_interior(x);
  const auto [u, v] = facet_distances(surface_, x);
  if (surface_.kind() == SurfaceKind::Sphere) {
    return 0.5 * (1.0 / u + 1.0 / v) + s_;
  }
  return 0.5 / u + s_;
}

double DeformedGeometry::scalar_curvature(double x) const {
  require_interior(x);
  const auto [u, v] = facet_distances(surface_, x);
  if (surface_.kind() == SurfaceKind::Sphere) {
    // 1/g_s'' = q / (N + s q) with q = 2uv, q' = 2(v - u), q'' = -4.
    const double n = surface_.orbital_count();
    const double q = 2.0 * u * v;
    const double dq = 2.0 * (v - u);
    const double d = n + s_ * q;
    return n * (4.0 * d + 2.0 * s_ * dq * dq) / (d * d * d);
  }
  const double d = 2.0 * s_ * u + 1.0;
  return 8.0 * s_ / (d * d * d);
}

}  // namespace lll
