#include "ntf/numtheory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ntf::numtheory {

namespace {
constexpr std::int64_t kDefaultBound = 1'000'000;
constexpr std::int64_t kMaxBound = std::int64_t{1} << 31;
}  // namespace

Sieve::Sieve(std::int64_t bound) : bound_(std::max<std::int64_t>(bound, 2)) {
  if (bound_ > kMaxBound) throw std::invalid_argument("sieve bound too large");
  spf_.assign(static_cast<std::size_t>(bound_) + 1, 0);
  for (std::int64_t i = 2; i <= bound_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    for (std::int64_t p : primes_) {
      if (p > spf_[i] || i * p > bound_) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

std::int64_t Sieve::spf(std::int64_t m) const {
  if (m < 2 || m > bound_) throw std::out_of_range("spf query out of range");
  return spf_[m];
}

bool Sieve::is_prime(std::int64_t m) const {
  return m >= 2 && spf(m) == m;
}

std::int64_t Sieve::prime(int index) const {
  if (index < 1 || index > static_cast<int>(primes_.size()))
    throw std::out_of_range("prime index out of range");
  return primes_[index - 1];
}

int Sieve::prime_count(std::int64_t n) const {
  if (n > bound_) throw std::out_of_range("prime_count query out of range");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), n);
  return static_cast<int>(it - primes_.begin());
}

const Sieve& sieve_for(std::int64_t need) {
  static std::mutex mu;
  // Old generations are kept alive so references remain valid.
  static std::vector<std::unique_ptr<Sieve>>* generations =
      new std::vector<std::unique_ptr<Sieve>>();
  static std::atomic<const Sieve*> latest{nullptr};

  const Sieve* s = latest.load(std::memory_order_acquire);
  if (s != nullptr && s->bound() >= need) return *s;

  std::lock_guard<std::mutex> lock(mu);
  s = latest.load(std::memory_order_relaxed);
  if (s == nullptr || s->bound() < need) {
    std::int64_t b = s == nullptr ? kDefaultBound : s->bound();
    while (b < need) {
      if (b > kMaxBound / 2)
        throw std::invalid_argument("requested sieve bound too large");
      b *= 2;
    }
    generations->push_back(std::make_unique<Sieve>(b));
    latest.store(generations->back().get(), std::memory_order_release);
    s = generations->back().get();
  }
  return *s;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("primes_up_to requires n >= 1");
  const Sieve& s = sieve_for(n);
  const auto& ps = s.primes();
  auto it = std::upper_bound(ps.begin(), ps.end(), n);
  return std::vector<std::int64_t>(ps.begin(), it);
}

int prime_count(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("prime_count requires n >= 1");
  return sieve_for(n).prime_count(n);
}

std::int64_t nth_prime(int index) {
  if (index < 1) throw std::invalid_argument("prime index must be >= 1");
  std::int64_t need = kDefaultBound;
  if (index >= 6) {
    // p_i < i (ln i + ln ln i) for i >= 6
    double bound = index * (std::log(index) + std::log(std::log(index)));
    need = std::max<std::int64_t>(need, static_cast<std::int64_t>(bound) + 16);
  }
  const Sieve* s = &sieve_for(need);
  while (static_cast<int>(s->primes().size()) < index)
    s = &sieve_for(s->bound() * 2);
  return s->prime(index);
}

Factorization factorize(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("factorize requires m >= 1");
  Factorization f;
  f.value = m;
  if (m == 1) return f;
  const Sieve& s = sieve_for(m);
  while (m > 1) {
    std::int64_t p = s.spf(m);
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.parts.push_back({s.prime_count(p), e});
  }
  return f;
}

std::int64_t smallest_prime_factor(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("smallest_prime_factor requires m >= 2");
  return sieve_for(m).spf(m);
}

int lambda(std::int64_t m) {
  int total = 0;
  for (const auto& pp : factorize(m).parts) total += pp.exp;
  return total;
}

std::int64_t lambda_tilde(std::int64_t m) {
  std::int64_t total = 0;
  for (const auto& pp : factorize(m).parts)
    total += static_cast<std::int64_t>(pp.exp) * nth_prime(pp.index);
  return total;
}

int moebius(std::int64_t m) {
  auto f = factorize(m);
  for (const auto& pp : f.parts)
    if (pp.exp > 1) return 0;
  return f.parts.size() % 2 == 0 ? 1 : -1;
}

std::int64_t weight(const Monomial& m) {
  __int128 acc = 1;
  for (int i = 1; i <= m.var_count(); ++i) {
    std::int64_t p = nth_prime(i);
    for (int k = 0; k < m.exponent(i); ++k) {
      acc *= p;
      if (acc > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("monomial weight exceeds 64 bits");
    }
  }
  return static_cast<std::int64_t>(acc);
}

Monomial monomial_of(std::int64_t m, int var_count) {
  auto f = factorize(m);
  if (!f.parts.empty() && f.parts.back().index > var_count)
    throw std::invalid_argument(
        "integer " + std::to_string(m) + " needs a prime index beyond " +
        std::to_string(var_count) + " variables");
  std::vector<int> exps(static_cast<std::size_t>(var_count), 0);
  for (const auto& pp : f.parts) exps[pp.index - 1] = pp.exp;
  return Monomial(std::move(exps));
}

}  // namespace ntf::numtheory
