#pragma once

// Slater decomposition of the Laughlin polynomial prod_{i<j} (w_j - w_i)^m.
//
// The product is expanded over exact integers; the coefficient a_lambda of the
// Slater determinant with strictly increasing levels lambda is the coefficient
// of the ascending monomial w_1^{lambda_1} ... w_Ne^{lambda_Ne}.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

namespace lll {

using BigInt = boost::multiprecision::cpp_int;

/// Strictly increasing non-negative orbital levels of a Slater determinant.
using SlaterIndex = std::vector<int>;

bool is_slater_index(const SlaterIndex& levels);

struct ExpandOptions {
  /// Upper bound on the number of monomials any intermediate product may hold.
  std::size_t max_terms = 5'000'000;
};

class LaughlinExpansion {
 public:
  using Terms = std::map<SlaterIndex, BigInt>;

  /// Validates the degree law and index shape of every term.
  LaughlinExpansion(int particles, int inverse_filling, Terms terms);

  int particles() const { return particles_; }
  int inverse_filling() const { return inverse_filling_; }
  /// Terms ordered lexicographically by lambda.
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// a_lambda, or 0 when lambda does not occur.
  BigInt coefficient(const SlaterIndex& levels) const;

  /// Largest level that any lambda may use, m (Ne - 1).
  int max_level() const { return inverse_filling_ * (particles_ - 1); }

  /// {"particles", "inverse_filling", "terms": [{"lambda", "coeff"}]} with
  /// coefficients as decimal strings.
  nlohmann::json to_json() const;
  static LaughlinExpansion from_json(const nlohmann::json& doc);

 private:
  int particles_;
  int inverse_filling_;
  Terms terms_;
};

/// Expands prod_{i<j} (w_j - w_i)^m. Requires m odd and positive, Ne >= 1.
/// Throws SizeError when the term budget would be exceeded and DomainError on
/// invalid arguments.
LaughlinExpansion expand(int particles, int inverse_filling, const ExpandOptions& opts = {});

inline BigInt coefficient(const LaughlinExpansion& exp, const SlaterIndex& levels) {
  return exp.coefficient(levels);
}

/// Upper bound on the support of the expanded product: the number of exponent
/// vectors of total degree m Ne (Ne-1)/2 with every entry at most m (Ne-1).
double estimated_term_count(int particles, int inverse_filling);

/// (0, m, 2m, ..., m (Ne-1))
SlaterIndex most_uniform_index(int particles, int inverse_filling);
/// (Ne-1, Ne, ..., 2Ne-2)
SlaterIndex maximally_bunched_index(int particles);

/// n!! for n >= -1.
BigInt double_factorial(int n);
/// log(n!!) in floating point, for n beyond exact-product territory.
double log_double_factorial(int n);

}  // namespace lll
