#pragma once

// Toric Kähler data of the sphere and the plane in action-angle coordinates
// (x, theta), together with its deformation by the imaginary-time flow of
// H(x) = x^2/2. Units are hbar_eff = 1; the polytope starts at a = -1/2.

#include <string_view>

namespace lll {

enum class SurfaceKind { Sphere, Plane };

std::string_view to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(std::string_view name);

/// Which surface, and how many one-particle orbitals it carries.
///
/// Sphere: polytope [-1/2, N - 1/2], exactly N orbitals m = 0..N-1.
/// Plane:  polytope [-1/2, inf); N only caps orbital enumeration.
class SurfaceSpec {
 public:
  static constexpr double kBoundaryOffset = -0.5;

  static SurfaceSpec sphere(int orbital_count);
  static SurfaceSpec plane(int orbital_count);

  SurfaceKind kind() const { return kind_; }
  int orbital_count() const { return orbital_count_; }

  double lower() const { return kBoundaryOffset; }
  /// Upper end of the polytope; +infinity for the plane.
  double upper() const;
  /// Polytope length; +infinity for the plane.
  double length() const;

  /// True if x lies in the open interior of the polytope.
  bool contains(double x) const;
  /// True if m is an integral point usable as an orbital index.
  bool is_orbital(int m) const;

  friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;

 private:
  SurfaceSpec(SurfaceKind kind, int orbital_count)
      : kind_(kind), orbital_count_(orbital_count) {}

  SurfaceKind kind_;
  int orbital_count_;
};

/// A surface together with an imaginary deformation time s >= 0.
class DeformedGeometry {
 public:
  DeformedGeometry(SurfaceSpec surface, double s);

  const SurfaceSpec& surface() const { return surface_; }
  double s() const { return s_; }

  /// g_s(x) = g(x) + s x^2 / 2
  double potential(double x) const;
  /// y_s(x) = g_s'(x)
  double log_modulus(double x) const;
  /// kappa_s(x) = x y_s(x) - g_s(x)
  double kahler_potential(double x) const;
  /// g_s''(x), the dx^2 coefficient of the metric (1/g_s'' multiplies dtheta^2).
  double metric_coeff(double x) const;
  /// Abreu scalar curvature -(1/g_s'')''.
  double scalar_curvature(double x) const;

 private:
  void require_interior(double x) const;

  SurfaceSpec surface_;
  double s_;
};

/// Canonical symplectic potential: g_P on the sphere, the linearly shifted
/// g~_P(x) = (x+1/2) log(2(x+1/2)) / 2 - x/2 on the plane.
double canonical_potential(const SurfaceSpec& surface, double x);

inline double deformed_potential(const DeformedGeometry& geom, double x) {
  return geom.potential(x);
}
inline double moment_to_log(const DeformedGeometry& geom, double x) {
  return geom.log_modulus(x);
}
inline double kahler_potential(const DeformedGeometry& geom, double x) {
  return geom.kahler_potential(x);
}
inline double metric_coeff(const DeformedGeometry& geom, double x) {
  return geom.metric_coeff(x);
}
inline double scalar_curvature(const DeformedGeometry& geom, double x) {
  return geom.scalar_curvature(x);
}

}  // namespace lll
