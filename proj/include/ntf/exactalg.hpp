#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ntf {

using Int = mpz_class;
using Rat = mpq_class;

// Polynomial in the formal variables t (homological degree) and u (internal
// degree) with exact integer coefficients. Zero coefficients are never
// stored; the zero polynomial has an empty term map.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (t-degree, u-degree)

  BiPoly() = default;
  BiPoly(long c) : BiPoly(Int(c)) {}
  BiPoly(const Int& c);
  static BiPoly term(const Int& c, int tdeg, int udeg);
  static BiPoly t() { return term(1, 1, 0); }
  static BiPoly u() { return term(1, 0, 1); }

  bool is_zero() const { return c_.empty(); }
  Int coeff(int tdeg, int udeg) const;
  int t_degree() const;  // -1 for the zero polynomial
  int u_degree() const;  // -1 for the zero polynomial
  bool depends_on_u() const { return u_degree() > 0; }

  // Sum of the terms with t-degree k, divided by t^k (a polynomial in u).
  BiPoly slice_t(int k) const;
  Int sum_of_coeffs() const;  // evaluation at t = u = 1
  Int evaluate(const Int& tv, const Int& uv) const;

  const std::map<Key, Int>& terms() const { return c_; }
  void add_term(int tdeg, int udeg, const Int& c);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::map<Key, Int> c_;
};

BiPoly pow(const BiPoly& base, unsigned e);
BiPoly specialize_u(const BiPoly& p, const Int& value = 1);
BiPoly specialize_t(const BiPoly& p, const Int& value = 1);

// Exact division by 1 + t resp. 1 + u*t; nullopt when not divisible.
std::optional<BiPoly> divide_one_plus_t(const BiPoly& p);
std::optional<BiPoly> divide_one_plus_ut(const BiPoly& p);

// Reduced ratio of two BiPoly values. Invariants: denominator constant term
// is +1; no common factor (1+t)^k (univariate) or (1+ut)^k (bivariate); the
// joint integer content of numerator and denominator is 1.
struct RatFn {
  BiPoly num;
  BiPoly den;
  friend bool operator==(const RatFn&, const RatFn&) = default;
};

// Reduce num/den to the canonical form above. The denominator must have a
// nonzero constant term.
RatFn ratfn_canonicalize(BiPoly num, BiPoly den);

// Coefficients of the power-series expansion of f through t-degree `order`;
// entry q is the coefficient of t^q, a polynomial in u.
std::vector<BiPoly> series_expand(const RatFn& f, int order);

// Deterministic text form: terms by ascending t-degree then ascending
// u-degree, explicit signs, '*' for products and '^' for powers.
std::string format_canonical(const BiPoly& p);
std::string format_canonical(const RatFn& f);  // "(num)/(den)"

}  // namespace ntf
