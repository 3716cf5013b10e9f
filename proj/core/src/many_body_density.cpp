#include "lll/many_body_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lll/errors.hpp"

namespace lll {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_abs(const BigInt& a) {
  if (a.is_zero()) return kNegInf;
  const double d = boost::multiprecision::abs(a).convert_to<double>();
  if (std::isfinite(d)) return std::log(d);
  // Beyond double range: keep the leading 64 bits.
  const unsigned drop = boost::multiprecision::msb(a) - 63;
  const BigInt lead = boost::multiprecision::abs(a) / (BigInt(1) << drop);
  return std::log(lead.convert_to<double>()) + drop * std::numbers::ln2;
}

double log_abs_diff(double a, double b) {
  if (a == b) return kNegInf;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (lo == kNegInf) return hi;
  return hi + std::log(-std::expm1(lo - hi));
}

void require_levels_on(const SurfaceSpec& surface, const LaughlinExpansion& exp) {
  for (const auto& [levels, coeff] : exp.terms()) {
    for (int p : levels) {
      if (!surface.is_orbital(p)) {
        throw DomainError("level " + std::to_string(p) + " is not an orbital of the " +
                          std::string(to_string(surface.kind())) + " with N = " +
                          std::to_string(surface.orbital_count()));
      }
    }
  }
}

int top_level_of(const LaughlinExpansion& exp) {
  int top = 0;
  for (const auto& [levels, coeff] : exp.terms()) top = std::max(top, levels.back());
  return top;
}

Domain polytope_domain(const SurfaceSpec& surface, int top_level) {
  if (surface.kind() == SurfaceKind::Sphere) {
    return Interval{surface.lower(), surface.upper()};
  }
  return HalfLine{surface.lower(), top_level + 2.0};
}

// Unnormalized log of sum_{lambda containing p} |a_lambda|^2 S(lambda) per level p.
std::map<int, double> limit_occupation_logs(const LaughlinExpansion& exp,
                                            const SurfaceSpec& surface) {
  if (exp.size() == 0) throw DomainError("expansion is empty");
  require_levels_on(surface, exp);
  std::map<int, std::vector<double>> per_level;
  for (const auto& [levels, coeff] : exp.terms()) {
    double log_s = 2.0 * log_abs(coeff);
    for (int p : levels) log_s += 2.0 * canonical_potential(surface, p);
    for (int p : levels) per_level[p].push_back(log_s);
  }
  std::map<int, double> out;
  for (const auto& [p, logs] : per_level) out[p] = log_sum_exp(logs);
  return out;
}

}  // namespace

SurfaceSpec laughlin_surface(SurfaceKind kind, int particles, int inverse_filling) {
  const int n = inverse_filling * (particles - 1) + 1;
  return kind == SurfaceKind::Sphere ? SurfaceSpec::sphere(n) : SurfaceSpec::plane(n);
}

WeightLedger slater_weights(const LaughlinExpansion& exp, const OrbitalNormTable& norms,
                            EvolutionMode mode) {
  const DeformedGeometry& geom = norms.geometry();
  require_levels_on(geom.surface(), exp);
  WeightLedger ledger{geom.surface(), geom.s(), mode, {}};
  ledger.entries.reserve(exp.size());
  for (const auto& [levels, coeff] : exp.terms()) {
    double log_w = 2.0 * log_abs(coeff);
    double squares = 0.0;
    for (int p : levels) {
      log_w += norms.norm_log(p);
      squares += static_cast<double>(p) * p;
    }
    if (mode == EvolutionMode::Gcst) log_w -= geom.s() * squares;
    if (!std::isfinite(log_w)) {
      throw DomainError("non-finite Slater weight; orbital norms out of range");
    }
    ledger.entries.emplace_back(levels, log_w);
  }
  return ledger;
}

WeightLedger slater_weights(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                            EvolutionMode mode, const QuadratureConfig& cfg) {
  require_levels_on(geom.surface(), exp);
  const OrbitalNormTable norms(geom, top_level_of(exp) + 1, cfg);
  return slater_weights(exp, norms, mode);
}

DensityProfile::DensityProfile(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                               EvolutionMode mode, const QuadratureConfig& cfg)
    : geom_(geom), mode_(mode) {
  require_levels_on(geom.surface(), exp);
  const OrbitalNormTable norms(geom, top_level_of(exp) + 1, cfg);
  build(slater_weights(exp, norms, mode), norms);
}

DensityProfile::DensityProfile(const WeightLedger& ledger, const OrbitalNormTable& norms)
    : geom_(norms.geometry()), mode_(ledger.mode) {
  if (!(ledger.surface == geom_.surface()) || ledger.s != geom_.s()) {
    throw DomainError("weight ledger and orbital norms belong to different geometries");
  }
  build(ledger, norms);
}

void DensityProfile::build(const WeightLedger& ledger, const OrbitalNormTable& norms) {
  if (ledger.entries.empty()) throw DomainError("weight ledger is empty");
  particles_ = static_cast<int>(ledger.entries.front().first.size());

  std::vector<double> all;
  std::map<int, std::vector<double>> per_level;
  for (const auto& [levels, log_w] : ledger.entries) {
    all.push_back(log_w);
    for (int p : levels) per_level[p].push_back(log_w);
  }
  const double total = log_sum_exp(all);
  const double log_two_pi = std::log(2.0 * std::numbers::pi);
  for (const auto& [p, logs] : per_level) {
    occupation_.emplace_back(p, log_sum_exp(logs) - total);
    normalizers_.push_back(log_two_pi - norms.norm_log(p));
  }
}

double DensityProfile::log_density(double x) const {
  // Streaming log-sum-exp in ascending level order.
  double hi = kNegInf;
  double sum = 0.0;
  for (std::size_t k = 0; k < occupation_.size(); ++k) {
    const double v = occupation_[k].second + normalizers_[k] +
                     orbital_density_log(geom_, occupation_[k].first, x);
    if (v == kNegInf) continue;
    if (v > hi) {
      sum = sum * std::exp(hi - v) + 1.0;
      hi = v;
    } else {
      sum += std::exp(v - hi);
    }
  }
  return hi == kNegInf ? kNegInf : hi + std::log(sum);
}

double DensityProfile::operator()(double x) const { return std::exp(log_density(x)); }

DensityCurve sample(const DensityProfile& profile, const std::vector<double>& grid) {
  const SurfaceSpec& surface = profile.geometry().surface();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!surface.contains(grid[k])) {
      throw DomainError("grid point " + std::to_string(grid[k]) + " is outside the polytope");
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) throw DomainError("grid must be strictly ascending");
  }
  DensityCurve curve{grid, {}, profile.geometry().s(), profile.mode(), profile.particles()};
  curve.rhos.reserve(grid.size());
  for (double x : grid) curve.rhos.push_back(profile(x));
  return curve;
}

DensityCurve density(const LaughlinExpansion& exp, const DeformedGeometry& geom,
                     EvolutionMode mode, const std::vector<double>& grid,
                     const QuadratureConfig& cfg) {
  return sample(DensityProfile(exp, geom, mode, cfg), grid);
}

double density_mass(const DensityProfile& profile, const QuadratureConfig& cfg) {
  const auto f = [&](double x) { return profile.log_density(x); };
  return std::exp(
      integrate_log(f, polytope_domain(profile.geometry().surface(), profile.top_level()), cfg));
}

double l1_distance(const DensityProfile& a, const DensityProfile& b,
                   const QuadratureConfig& cfg) {
  if (!(a.geometry().surface() == b.geometry().surface())) {
    throw DomainError("L1 distance needs both profiles on the same surface");
  }
  const auto f = [&](double x) { return log_abs_diff(a.log_density(x), b.log_density(x)); };
  const int top = std::max(a.top_level(), b.top_level());
  return std::exp(integrate_log(f, polytope_domain(a.geometry().surface(), top), cfg));
}

double trapezoid_mass(const DensityCurve& curve) {
  double sum = 0.0;
  for (std::size_t k = 1; k < curve.xs.size(); ++k) {
    sum += 0.5 * (curve.xs[k] - curve.xs[k - 1]) * (curve.rhos[k] + curve.rhos[k - 1]);
  }
  return sum;
}

std::map<int, double> limit_weights(const LaughlinExpansion& exp, const SurfaceSpec& surface) {
  const auto logs = limit_occupation_logs(exp, surface);
  std::vector<double> all;
  for (const auto& [levels, coeff] : exp.terms()) {
    double log_s = 2.0 * log_abs(coeff);
    for (int p : levels) log_s += 2.0 * canonical_potential(surface, p);
    all.push_back(log_s);
  }
  const double total = log_sum_exp(all);
  std::map<int, double> out;
  for (const auto& [p, log_w] : logs) out[p] = std::exp(log_w - total);
  return out;
}

double peak_ratio_analytic(const LaughlinExpansion& exp, const SurfaceSpec& surface, int p,
                           int q) {
  const auto logs = limit_occupation_logs(exp, surface);
  const auto iq = logs.find(q);
  if (iq == logs.end()) {
    throw EmptySupport("level " + std::to_string(q) + " is not occupied by any Slater index");
  }
  if (p == q) return 1.0;
  const auto ip = logs.find(p);
  if (ip == logs.end()) return 0.0;
  return std::exp(ip->second - iq->second);
}

double peak_ratio_empirical(const DensityCurve& curve, int p, int q) {
  const auto value_at = [&](int point) {
    const auto it = std::lower_bound(curve.xs.begin(), curve.xs.end(), static_cast<double>(point));
    if (it == curve.xs.end() || *it != static_cast<double>(point)) {
      throw GridError("x = " + std::to_string(point) + " is not on the density grid");
    }
    return curve.rhos[static_cast<std::size_t>(it - curve.xs.begin())];
  };
  const double rp = value_at(p);
  const double rq = value_at(q);
  if (p == q) return 1.0;
  if (rq == 0.0) throw EmptySupport("density vanishes at x = " + std::to_string(q));
  return rp / rq;
}

SlaterIndex dominant_slater(const LaughlinExpansion& exp) {
  if (exp.size() == 0) throw DomainError("expansion is empty");
  const SlaterIndex* best = nullptr;
  long long best_squares = -1;
  // Terms iterate in lexicographic order, so strict > keeps the smallest on ties.
  for (const auto& [levels, coeff] : exp.terms()) {
    long long squares = 0;
    for (int p : levels) squares += static_cast<long long>(p) * p;
    if (squares > best_squares) {
      best_squares = squares;
      best = &levels;
    }
  }
  return *best;
}

std::vector<SFactorRow> sfactor_scan(SurfaceKind kind, int ne_min, int ne_max,
                                     int inverse_filling) {
  if (ne_min < 2 || ne_max < ne_min) throw DomainError("particle range must satisfy 2 <= min <= max");
  if (inverse_filling < 1 || inverse_filling % 2 == 0) {
    throw DomainError("inverse filling must be a positive odd integer");
  }
  std::vector<SFactorRow> rows;
  for (int ne = ne_min; ne <= ne_max; ++ne) {
    const SurfaceSpec surface = laughlin_surface(kind, ne, inverse_filling);
    double log_ratio = 2.0 * log_double_factorial(2 * ne - 1);
    for (int p : maximally_bunched_index(ne)) log_ratio += 2.0 * canonical_potential(surface, p);
    for (int p : most_uniform_index(ne, inverse_filling)) {
      log_ratio -= 2.0 * canonical_potential(surface, p);
    }
    rows.push_back({ne, log_ratio});
  }
  return rows;
}

std::vector<double> polytope_grid(const SurfaceSpec& surface, int points, double plane_extent) {
  if (points < 2) throw DomainError("grid needs at least two points");
  const bool sphere = surface.kind() == SurfaceKind::Sphere;
  const double extent = sphere ? surface.length() : plane_extent;
  if (!(extent > 0.0) || !std::isfinite(extent)) throw DomainError("grid extent must be positive");
  const double lower = surface.lower();
  const int last = sphere ? points - 1 : points;

  std::vector<double> grid;
  grid.reserve(points + surface.orbital_count());
  for (int k = 1; k <= last; ++k) {
    double x = lower + extent * k / points;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) < 1e-9) x = nearest;
    grid.push_back(x);
  }
  const double top = sphere ? surface.upper() : lower + extent;
  for (int p = 0; p < surface.orbital_count() && p < top; ++p) grid.push_back(p);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace lll
