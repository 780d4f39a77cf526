#include "ntf/exactalg.hpp"

#include <stdexcept>

namespace ntf {

BiPoly::BiPoly(const Int& c) {
  if (c != 0) c_[{0, 0}] = c;
}

BiPoly BiPoly::term(const Int& c, int tdeg, int udeg) {
  if (tdeg < 0 || udeg < 0)
    throw std::invalid_argument("term degrees must be >= 0");
  BiPoly p;
  if (c != 0) p.c_[{tdeg, udeg}] = c;
  return p;
}

Int BiPoly::coeff(int tdeg, int udeg) const {
  auto it = c_.find({tdeg, udeg});
  return it == c_.end() ? Int(0) : it->second;
}

int BiPoly::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : c_) d = std::max(d, k.first);
  return d;
}

int BiPoly::u_degree() const {
  int d = -1;
  for (const auto& [k, c] : c_) d = std::max(d, k.second);
  return d;
}

BiPoly BiPoly::slice_t(int k) const {
  BiPoly out;
  for (const auto& [key, c] : c_)
    if (key.first == k) out.c_[{0, key.second}] = c;
  return out;
}

Int BiPoly::sum_of_coeffs() const {
  Int s = 0;
  for (const auto& [k, c] : c_) s += c;
  return s;
}

Int BiPoly::evaluate(const Int& tv, const Int& uv) const {
  Int s = 0;
  for (const auto& [k, c] : c_) {
    Int term = c;
    for (int i = 0; i < k.first; ++i) term *= tv;
    for (int i = 0; i < k.second; ++i) term *= uv;
    s += term;
  }
  return s;
}

void BiPoly::add_term(int tdeg, int udeg, const Int& c) {
  if (c == 0) return;
  Key key{tdeg, udeg};
  auto [it, inserted] = c_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.c_) add_term(k.first, k.second, -c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [k, c] : c_) out.c_[k] = -c;
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ka, ca] : a.c_)
    for (const auto& [kb, cb] : b.c_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiPoly pow(const BiPoly& base, unsigned e) {
  BiPoly result(1);
  BiPoly b = base;
  while (e > 0) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e > 0) b = b * b;
  }
  return result;
}

BiPoly specialize_u(const BiPoly& p, const Int& value) {
  BiPoly out;
  for (const auto& [k, c] : p.terms()) {
    Int f = c;
    for (int i = 0; i < k.second; ++i) f *= value;
    out.add_term(k.first, 0, f);
  }
  return out;
}

BiPoly specialize_t(const BiPoly& p, const Int& value) {
  BiPoly out;
  for (const auto& [k, c] : p.terms()) {
    Int f = c;
    for (int i = 0; i < k.first; ++i) f *= value;
    out.add_term(0, k.second, f);
  }
  return out;
}

namespace {

// Synthetic division on the t-slices: p = (1 + g*t) * q with q_k determined
// by q_k = c_k - g*q_{k-1}; the division is exact iff the final carry is 0.
std::optional<BiPoly> divide_one_plus_gt(const BiPoly& p, const BiPoly& g) {
  if (p.is_zero()) return BiPoly();
  int d = p.t_degree();
  if (d == 0) return std::nullopt;
  std::vector<BiPoly> q(static_cast<std::size_t>(d));
  BiPoly prev;
  for (int k = 0; k < d; ++k) {
    q[k] = p.slice_t(k) - g * prev;
    prev = q[k];
  }
  if (p.slice_t(d) - g * prev != BiPoly())
    return std::nullopt;
  BiPoly out;
  for (int k = 0; k < d; ++k)
    for (const auto& [key, c] : q[k].terms())
      out.add_term(k, key.second, c);
  return out;
}

Int joint_content(const BiPoly& a, const BiPoly& b) {
  Int g = 0;
  for (const auto& [k, c] : a.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  for (const auto& [k, c] : b.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

BiPoly divide_by_int(const BiPoly& p, const Int& g) {
  BiPoly out;
  for (const auto& [k, c] : p.terms()) out.add_term(k.first, k.second, c / g);
  return out;
}

}  // namespace

std::optional<BiPoly> divide_one_plus_t(const BiPoly& p) {
  return divide_one_plus_gt(p, BiPoly(1));
}

std::optional<BiPoly> divide_one_plus_ut(const BiPoly& p) {
  return divide_one_plus_gt(p, BiPoly::u());
}

RatFn ratfn_canonicalize(BiPoly num, BiPoly den) {
  if (den.is_zero() || den.coeff(0, 0) == 0)
    throw std::domain_error("denominator needs a nonzero constant term");
  if (num.is_zero()) return {BiPoly(), BiPoly(1)};

  const bool bivariate = num.depends_on_u() || den.depends_on_u();
  for (;;) {
    auto qn = bivariate ? divide_one_plus_ut(num) : divide_one_plus_t(num);
    if (!qn) break;
    auto qd = bivariate ? divide_one_plus_ut(den) : divide_one_plus_t(den);
    if (!qd) break;
    num = *qn;
    den = *qd;
  }

  Int g = joint_content(num, den);
  if (g > 1) {
    num = divide_by_int(num, g);
    den = divide_by_int(den, g);
  }
  if (den.coeff(0, 0) < 0) {
    num = -num;
    den = -den;
  }
  if (den.coeff(0, 0) != 1)
    throw std::domain_error("denominator constant term cannot be scaled to 1");
  return {num, den};
}

std::vector<BiPoly> series_expand(const RatFn& f, int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  if (f.den.coeff(0, 0) != 1)
    throw std::domain_error("series expansion needs denominator constant 1");
  int dd = f.den.t_degree();
  std::vector<BiPoly> den_slices(static_cast<std::size_t>(dd) + 1);
  for (int k = 0; k <= dd; ++k) den_slices[k] = f.den.slice_t(k);

  std::vector<BiPoly> c(static_cast<std::size_t>(order) + 1);
  for (int q = 0; q <= order; ++q) {
    BiPoly acc = f.num.slice_t(q);
    for (int k = 1; k <= std::min(q, dd); ++k) acc -= den_slices[k] * c[q - k];
    c[q] = acc;
  }
  return c;
}

std::string format_canonical(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    auto [td, ud] = key;
    Int a = abs(c);
    std::string mono;
    if (td > 0) mono += td == 1 ? "t" : "t^" + std::to_string(td);
    if (ud > 0) {
      if (!mono.empty()) mono += "*";
      mono += ud == 1 ? "u" : "u^" + std::to_string(ud);
    }
    std::string body;
    if (mono.empty())
      body = a.get_str();
    else if (a == 1)
      body = mono;
    else
      body = a.get_str() + "*" + mono;
    if (first) {
      s += (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

std::string format_canonical(const RatFn& f) {
  return "(" + format_canonical(f.num) + ")/(" + format_canonical(f.den) + ")";
}

}  // namespace ntf
