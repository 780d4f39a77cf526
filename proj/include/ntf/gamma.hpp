#pragma once

#include <cstdint>
#include <vector>

#include "ntf/exactalg.hpp"

namespace ntf::gamma {

// Element of the level-n truncated convolution algebra: the values
// f(1), ..., f(n) as exact rationals. Value semantics throughout.
class TruncFn {
 public:
  explicit TruncFn(int level);
  TruncFn(int level, std::vector<Rat> values);

  int level() const { return level_; }
  const Rat& at(std::int64_t m) const;  // 1-based
  void set(std::int64_t m, const Rat& v);
  bool is_zero() const;

  friend bool operator==(const TruncFn&, const TruncFn&) = default;

 private:
  int level_;
  std::vector<Rat> v_;
};

TruncFn operator+(const TruncFn& f, const TruncFn& g);
TruncFn operator-(const TruncFn& f, const TruncFn& g);
TruncFn scale(const Rat& c, const TruncFn& f);

// Truncated convolution: (fg)(m) = sum over ab = m of f(a) g(b).
TruncFn convolve(const TruncFn& f, const TruncFn& g);

TruncFn epsilon(int n);     // multiplicative unit
TruncFn nu0(int n);         // constant function 1
TruncFn moebius_fn(int n);
TruncFn chi(int i, int n);  // supported at the i-th prime (zero if p_i > n)

// Convolution inverse; requires f(1) != 0 (the units of the local ring).
TruncFn invert(const TruncFn& f);

// Projection onto a lower level (drops the values above `level`).
TruncFn truncate(const TruncFn& f, int level);

std::int64_t norm_N(const TruncFn& f);  // least m with f(m) != 0
int degree_D(const TruncFn& f);         // least lambda over the support
std::int64_t norm_M(const TruncFn& f);  // least support m attaining degree_D

// True iff f(1) = 1 and f(ab) = f(a) f(b) for all coprime a, b with ab <= n.
bool is_multiplicative(const TruncFn& f);

}  // namespace ntf::gamma
