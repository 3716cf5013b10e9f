#include "lll/laughlin_expansion.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "lll/errors.hpp"

namespace lll {

namespace {

// Exponent vectors are packed 8 bits per variable into one word.
constexpr int kMaxPackedVariables = 8;
constexpr int kMaxPackedExponent = 255;

using PackedPoly = std::unordered_map<std::uint64_t, BigInt>;

constexpr int shift_of(int var) { return 8 * var; }

int exponent_of(std::uint64_t key, int var) {
  return static_cast<int>((key >> shift_of(var)) & 0xffu);
}

BigInt binomial(int n, int k) {
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

// P <- P * (w_j - w_i)^m
PackedPoly multiply_pair_power(const PackedPoly& poly, int i, int j, int m,
                               std::size_t max_terms) {
  std::vector<BigInt> coeffs;
  for (int k = 0; k <= m; ++k) {
    BigInt c = binomial(m, k);
    if (k % 2 == 1) c = -c;
    coeffs.push_back(std::move(c));
  }

  PackedPoly out;
  out.reserve(poly.size() * 2);
  for (const auto& [key, value] : poly) {
    for (int k = 0; k <= m; ++k) {
      // w_j^{m-k} (-w_i)^k
      const std::uint64_t step = (static_cast<std::uint64_t>(m - k) << shift_of(j)) +
                                 (static_cast<std::uint64_t>(k) << shift_of(i));
      out[key + step] += value * coeffs[k];
    }
    if (out.size() > max_terms) {
      throw SizeError("Laughlin expansion exceeded the term budget of " +
                      std::to_string(max_terms));
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

int degree_of(const SlaterIndex& levels) {
  int sum = 0;
  for (int l : levels) sum += l;
  return sum;
}

std::string format_index(const SlaterIndex& levels) {
  std::string out = "(";
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(levels[k]);
  }
  return out + ")";
}

}  // namespace

bool is_slater_index(const SlaterIndex& levels) {
  if (levels.empty() || levels.front() < 0) return false;
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k] <= levels[k - 1]) return false;
  }
  return true;
}

LaughlinExpansion::LaughlinExpansion(int particles, int inverse_filling, Terms terms)
    : particles_(particles), inverse_filling_(inverse_filling), terms_(std::move(terms)) {
  if (particles_ < 1) throw DomainError("need at least one particle");
  if (inverse_filling_ < 1 || inverse_filling_ % 2 == 0) {
    throw DomainError("inverse filling must be a positive odd integer");
  }
  const int degree = inverse_filling_ * particles_ * (particles_ - 1) / 2;
  for (const auto& [levels, coeff] : terms_) {
    if (static_cast<int>(levels.size()) != particles_ || !is_slater_index(levels)) {
      throw DomainError("malformed Slater index " + format_index(levels));
    }
    if (levels.back() > max_level()) {
      throw DomainError("Slater index " + format_index(levels) + " exceeds the top level");
    }
    if (degree_of(levels) != degree) {
      throw DomainError("Slater index " + format_index(levels) + " violates the degree law");
    }
    if (coeff.is_zero()) {
      throw DomainError("zero coefficient stored for " + format_index(levels));
    }
  }
}

BigInt LaughlinExpansion::coefficient(const SlaterIndex& levels) const {
  const auto it = terms_.find(levels);
  return it == terms_.end() ? BigInt{0} : it->second;
}

nlohmann::json LaughlinExpansion::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [levels, coeff] : terms_) {
    terms.push_back({{"lambda", levels}, {"coeff", coeff.str()}});
  }
  return {{"particles", particles_}, {"inverse_filling", inverse_filling_}, {"terms", terms}};
}

LaughlinExpansion LaughlinExpansion::from_json(const nlohmann::json& doc) {
  try {
    Terms terms;
    for (const auto& t : doc.at("terms")) {
      terms.emplace(t.at("lambda").get<SlaterIndex>(),
                    BigInt(t.at("coeff").get<std::string>()));
    }
    return {doc.at("particles").get<int>(), doc.at("inverse_filling").get<int>(),
            std::move(terms)};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed expansion JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    // cpp_int rejects non-numeric coefficient strings this way.
    if (dynamic_cast<const Error*>(&e)) throw;
    throw DomainError(std::string("malformed coefficient: ") + e.what());
  }
}

double estimated_term_count(int particles, int inverse_filling) {
  const int degree = inverse_filling * particles * (particles - 1) / 2;
  const int cap = inverse_filling * (particles - 1);
  std::vector<double> ways(degree + 1, 0.0);
  ways[0] = 1.0;
  for (int var = 0; var < particles; ++var) {
    std::vector<double> next(degree + 1, 0.0);
    for (int d = 0; d <= degree; ++d) {
      if (ways[d] == 0.0) continue;
      for (int e = 0; e <= cap && d + e <= degree; ++e) next[d + e] += ways[d];
    }
    ways = std::move(next);
  }
  return ways[degree];
}

LaughlinExpansion expand(int particles, int inverse_filling, const ExpandOptions& opts) {
  if (particles < 1) throw DomainError("need at least one particle");
  if (inverse_filling < 1 || inverse_filling % 2 == 0) {
    throw DomainError("inverse filling must be a positive odd integer");
  }
  if (particles > kMaxPackedVariables ||
      inverse_filling * (particles - 1) > kMaxPackedExponent) {
    throw SizeError("expansion supports at most " + std::to_string(kMaxPackedVariables) +
                    " particles and levels up to " + std::to_string(kMaxPackedExponent));
  }
  const double estimate = estimated_term_count(particles, inverse_filling);
  if (estimate > static_cast<double>(opts.max_terms)) {
    throw SizeError("Laughlin expansion for Ne=" + std::to_string(particles) +
                    ", m=" + std::to_string(inverse_filling) + " needs up to " +
                    std::to_string(static_cast<long long>(estimate)) +
                    " terms, above the budget of " + std::to_string(opts.max_terms));
  }

  PackedPoly poly{{0u, BigInt{1}}};
  for (int j = 1; j < particles; ++j) {
    for (int i = 0; i < j; ++i) {
      poly = multiply_pair_power(poly, i, j, inverse_filling, opts.max_terms);
    }
  }

  LaughlinExpansion::Terms terms;
  for (const auto& [key, value] : poly) {
    SlaterIndex levels(particles);
    for (int v = 0; v < particles; ++v) levels[v] = exponent_of(key, v);
    if (is_slater_index(levels)) terms.emplace(std::move(levels), value);
  }
  return {particles, inverse_filling, std::move(terms)};
}

SlaterIndex most_uniform_index(int particles, int inverse_filling) {
  SlaterIndex levels(particles);
  for (int k = 0; k < particles; ++k) levels[k] = inverse_filling * k;
  return levels;
}

SlaterIndex maximally_bunched_index(int particles) {
  SlaterIndex levels(particles);
  for (int k = 0; k < particles; ++k) levels[k] = particles - 1 + k;
  return levels;
}

BigInt double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial needs n >= -1");
  BigInt out = 1;
  for (int k = n; k > 1; k -= 2) out *= k;
  return out;
}

double log_double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial needs n >= -1");
  double out = 0.0;
  for (int k = n; k > 1; k -= 2) out += std::log(static_cast<double>(k));
  return out;
}

}  // namespace lll
