#include "ntf/gamma.hpp"

#include <numeric>
#include <stdexcept>

#include "ntf/numtheory.hpp"

namespace ntf::gamma {

namespace {

void require_same_level(const TruncFn& f, const TruncFn& g) {
  if (f.level() != g.level())
    throw std::invalid_argument("truncation levels differ");
}

}  // namespace

TruncFn::TruncFn(int level) : level_(level) {
  if (level < 1) throw std::invalid_argument("truncation level must be >= 1");
  v_.assign(static_cast<std::size_t>(level), Rat(0));
}

TruncFn::TruncFn(int level, std::vector<Rat> values) : TruncFn(level) {
  if (static_cast<int>(values.size()) != level)
    throw std::invalid_argument("value vector length must equal the level");
  v_ = std::move(values);
}

const Rat& TruncFn::at(std::int64_t m) const {
  if (m < 1 || m > level_) throw std::out_of_range("index outside 1..n");
  return v_[static_cast<std::size_t>(m - 1)];
}

void TruncFn::set(std::int64_t m, const Rat& v) {
  if (m < 1 || m > level_) throw std::out_of_range("index outside 1..n");
  v_[static_cast<std::size_t>(m - 1)] = v;
}

bool TruncFn::is_zero() const {
  for (const Rat& x : v_)
    if (x != 0) return false;
  return true;
}

TruncFn operator+(const TruncFn& f, const TruncFn& g) {
  require_same_level(f, g);
  TruncFn out(f.level());
  for (std::int64_t m = 1; m <= f.level(); ++m) out.set(m, f.at(m) + g.at(m));
  return out;
}

TruncFn operator-(const TruncFn& f, const TruncFn& g) {
  require_same_level(f, g);
  TruncFn out(f.level());
  for (std::int64_t m = 1; m <= f.level(); ++m) out.set(m, f.at(m) - g.at(m));
  return out;
}

TruncFn scale(const Rat& c, const TruncFn& f) {
  TruncFn out(f.level());
  for (std::int64_t m = 1; m <= f.level(); ++m) out.set(m, c * f.at(m));
  return out;
}

TruncFn convolve(const TruncFn& f, const TruncFn& g) {
  require_same_level(f, g);
  const int n = f.level();
  TruncFn out(n);
  for (std::int64_t a = 1; a <= n; ++a) {
    if (f.at(a) == 0) continue;
    for (std::int64_t b = 1; a * b <= n; ++b) {
      if (g.at(b) == 0) continue;
      out.set(a * b, out.at(a * b) + f.at(a) * g.at(b));
    }
  }
  return out;
}

TruncFn epsilon(int n) {
  TruncFn out(n);
  out.set(1, 1);
  return out;
}

TruncFn nu0(int n) {
  TruncFn out(n);
  for (std::int64_t m = 1; m <= n; ++m) out.set(m, 1);
  return out;
}

TruncFn moebius_fn(int n) {
  TruncFn out(n);
  for (std::int64_t m = 1; m <= n; ++m) out.set(m, numtheory::moebius(m));
  return out;
}

TruncFn chi(int i, int n) {
  TruncFn out(n);
  std::int64_t p = numtheory::nth_prime(i);
  if (p <= n) out.set(p, 1);
  return out;
}

TruncFn invert(const TruncFn& f) {
  const int n = f.level();
  if (f.at(1) == 0) throw std::domain_error("not a unit: f(1) = 0");
  TruncFn g(n);
  Rat lead = 1 / f.at(1);
  g.set(1, lead);
  for (std::int64_t m = 2; m <= n; ++m) {
    Rat s = 0;
    for (std::int64_t a = 2; a <= m; ++a)
      if (m % a == 0) s += f.at(a) * g.at(m / a);
    g.set(m, -lead * s);
  }
  return g;
}

TruncFn truncate(const TruncFn& f, int level) {
  if (level > f.level())
    throw std::invalid_argument("cannot truncate to a higher level");
  TruncFn out(level);
  for (std::int64_t m = 1; m <= level; ++m) out.set(m, f.at(m));
  return out;
}

std::int64_t norm_N(const TruncFn& f) {
  for (std::int64_t m = 1; m <= f.level(); ++m)
    if (f.at(m) != 0) return m;
  throw std::domain_error("norm of the zero function");
}

int degree_D(const TruncFn& f) {
  int best = -1;
  for (std::int64_t m = 1; m <= f.level(); ++m)
    if (f.at(m) != 0) {
      int l = numtheory::lambda(m);
      if (best < 0 || l < best) best = l;
    }
  if (best < 0) throw std::domain_error("degree of the zero function");
  return best;
}

std::int64_t norm_M(const TruncFn& f) {
  int d = degree_D(f);
  for (std::int64_t m = 1; m <= f.level(); ++m)
    if (f.at(m) != 0 && numtheory::lambda(m) == d) return m;
  throw std::domain_error("norm of the zero function");
}

bool is_multiplicative(const TruncFn& f) {
  if (f.at(1) != 1) return false;
  const std::int64_t n = f.level();
  for (std::int64_t a = 2; a * a <= n; ++a)
    for (std::int64_t b = a; a * b <= n; ++b)
      if (std::gcd(a, b) == 1 && f.at(a * b) != f.at(a) * f.at(b))
        return false;
  return true;
}

}  // namespace ntf::gamma
