#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "pipedream/permutation.hpp"

namespace pipedream {

using Integer = boost::multiprecision::cpp_int;

/// Exponents of x_1, x_2, ...; trailing zeros are dropped on construction
/// so equality ignores them.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exponents);

  const std::vector<int>& exponents() const { return exponents_; }
  /// Exponent of x_i (1-based); zero past the stored range.
  int operator[](int i) const;
  int degree() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> exponents_;
};

/// Graded lex, descending: higher total degree first, then the larger
/// exponent of x_1, then x_2, and so on.
struct GradedLexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

/// Integer polynomial in x_1, x_2, ... with no zero coefficients stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, Integer, GradedLexDescending>;

  void add_term(const ExponentVector& monomial, const Integer& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ExponentVector& monomial) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// "x1^2 + x1*x2 + 3*x1*x3"; the zero polynomial is "0", the unit "1".
std::string to_string(const Polynomial& poly);
std::ostream& operator<<(std::ostream& os, const Polynomial& poly);

/// [{"coeff": 1, "exponents": [2]}, ...] in canonical term order. A
/// coefficient that does not fit in 64 bits is written as a decimal string.
nlohmann::json to_json(const Polynomial& poly);

/// Sum over reduced pipe dreams of w of the product of x_row over crosses.
Polynomial schubert_polynomial(const Permutation& w);

/// Sum of coefficients.
Integer specialize_all_ones(const Polynomial& poly);

}  // namespace pipedream
