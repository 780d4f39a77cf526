#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "ntf/exactalg.hpp"
#include "ntf/monomial.hpp"

namespace ntf::homology {

// Finitely supported dimensions indexed by (homological degree q,
// internal degree j).
struct GradedDims {
  std::map<std::pair<int, int>, std::int64_t> dims;
  std::int64_t at(int q, int j) const;
  std::int64_t total(int q) const;  // sum over j
};

// Dense matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// Rank over the rationals via fraction-free (Bareiss) elimination.
std::size_t exact_rank(const ExactMatrix& m);
// Rank over the prime field F_p; requires p < 2^31 and that no entry
// denominator vanishes mod p.
std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p);
// Deterministic for a fixed seed; the result is a prime > lower.
std::uint64_t random_prime_above(std::uint64_t lower, std::uint64_t seed);

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All monomials of weight <= n in ascending weight order (length n).
std::vector<Monomial> basis_A(std::int64_t n);

// Homology dimensions of the exterior complex on x_1..x_r tensored with the
// level-n algebra; entry (q, j) is the dimension in homological degree q and
// internal degree j. Requires 0 <= q_max <= r(n).
GradedDims koszul_tor_dims(std::int64_t n, int q_max);

enum class RankMode { exact, modular };

struct BarOptions {
  RankMode mode = RankMode::exact;
  std::uint64_t seed = 0x5eed;  // modular mode only
};

// Homology dimensions of the normalized bar complex of the level-n algebra
// (q-th term: q-fold tensor power of the augmentation ideal). Exact mode is
// limited to n <= 8 and q_max <= 4; beyond that use modular mode.
GradedDims bar_tor_dims(std::int64_t n, int q_max, BarOptions opts = {});

}  // namespace ntf::homology
