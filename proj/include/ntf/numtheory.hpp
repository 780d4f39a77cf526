#pragma once

#include <cstdint>
#include <vector>

#include "ntf/monomial.hpp"

namespace ntf::numtheory {

struct PrimePower {
  int index;  // 1-based prime index; index 1 is the prime 2
  int exp;    // strictly positive
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization of a positive integer: value = prod p_i^{e_i},
// parts sorted by strictly increasing prime index. 1 factors into nothing.
struct Factorization {
  std::int64_t value = 1;
  std::vector<PrimePower> parts;
};

// Smallest-prime-factor table over [2, bound], built with a linear sieve.
// Immutable after construction; concurrent readers are fine.
class Sieve {
 public:
  explicit Sieve(std::int64_t bound);
  std::int64_t bound() const { return bound_; }
  std::int64_t spf(std::int64_t m) const;  // m in [2, bound]
  bool is_prime(std::int64_t m) const;
  std::int64_t prime(int index) const;  // 1-based, prime(1) = 2
  int prime_count(std::int64_t n) const;
  const std::vector<std::int64_t>& primes() const { return primes_; }

 private:
  std::int64_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int64_t> primes_;
};

// Shared sieve with capacity at least `need` (default bound 10^6, grown
// geometrically when exceeded). Returned references stay valid forever.
const Sieve& sieve_for(std::int64_t need);

std::vector<std::int64_t> primes_up_to(std::int64_t n);
int prime_count(std::int64_t n);           // r(n) = #{p prime : p <= n}
std::int64_t nth_prime(int index);         // 1-based
Factorization factorize(std::int64_t m);   // m >= 1
std::int64_t smallest_prime_factor(std::int64_t m);  // m >= 2

int lambda(std::int64_t m);                // prime factors with multiplicity
std::int64_t lambda_tilde(std::int64_t m); // sum of e_i * p_i over the factorization
int moebius(std::int64_t m);               // in {-1, 0, 1}

// Weight bijection between monomials and positive integers:
// weight(x1^a1 ... xk^ak) = p_1^a1 ... p_k^ak, weight(1) = 1.
std::int64_t weight(const Monomial& m);
// Inverse map; rejects m whose factorization uses a prime index > var_count.
Monomial monomial_of(std::int64_t m, int var_count);

}  // namespace ntf::numtheory
