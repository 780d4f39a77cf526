#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ntf {

// Monomial in the variables x1, x2, ... with nonnegative exponents.
// Trailing zero exponents are trimmed so that equal monomials compare equal;
// the unit monomial has an empty exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(int i);  // x_i, 1-based

  int exponent(int i) const;  // 1-based; 0 past the stored range
  int var_count() const { return static_cast<int>(exps_.size()); }
  bool is_one() const { return exps_.empty(); }

  std::vector<int> support() const;  // ascending variable indices
  int min_support() const;           // 0 for the unit monomial
  int max_support() const;           // 0 for the unit monomial
  int total_degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial times_var(int i) const;
  Monomial div_var(int i) const;  // requires exponent(i) > 0

  // "x1^2*x3"; the unit monomial prints as "1".
  std::string str() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  void trim();
  std::vector<int> exps_;
};

}  // namespace ntf
