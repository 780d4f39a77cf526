#pragma once

#include <cstdint>
#include <vector>

#include "ntf/exactalg.hpp"
#include "ntf/ideal.hpp"

namespace ntf::series {

// Bigraded dimension count of the level-n algebra: the coefficient at
// t^i u^j is the number of 1 <= m <= n with lambda(m) = i, lambda_tilde(m) = j.
struct HilbertSeries {
  std::int64_t n = 0;
  BiPoly poly;
};

HilbertSeries hilbert_bigraded(std::int64_t n);

// Resolution series of the generator table: sum over v of
// C_{n,v} (1+t)^{r-v}, and the graded refinement with u tracking the
// generator degree and (1+tu) per homological step.
BiPoly ek_poincare_ideal(const ideal::GenTable& tab);
BiPoly ek_poincare_ideal(std::int64_t n);
BiPoly ek_poincare_ideal_graded(const ideal::GenTable& tab);
BiPoly ek_poincare_ideal_graded(std::int64_t n);

// Coefficients of ek_poincare_ideal by t-degree.
std::vector<Int> betti_numbers_ideal(std::int64_t n);

// Series of the residue field over the level-n algebra:
// (1+t)^r / (1 - t^2 * P_ideal), canonicalized; graded variant with (1+ut)^r.
RatFn golod_poincare(const ideal::GenTable& tab);
RatFn golod_poincare(std::int64_t n);
RatFn golod_poincare_graded(const ideal::GenTable& tab);
RatFn golod_poincare_graded(std::int64_t n);

// Shape report for the non-graded residue series, written as
// -(1+t)^{l1} / q(t) with q = -(canonical denominator). Clause outcomes are
// computed, never assumed.
struct ConjectureReport {
  std::int64_t n = 0;
  int l1 = 0;  // multiplicity of (1+t) in the canonical numerator
  int l2 = 0;  // degree of q
  std::vector<Int> h;  // coefficients h_0 .. h_{l2} of q
  Int q_at_minus_one = 0;
  bool numerator_is_pure_power = false;
  bool q_nonzero_at_minus_one = false;
  bool l1_matches_odd_square_primes = false;  // #odd primes p with p^2 <= n
  bool l2_is_l1_plus_one = false;
  bool h0_is_minus_one = false;
  bool h1_matches = false;      // h_1 = r(n) - l1
  bool h_top_matches = false;   // h_{l2} = C_{n,1} = ceil(n/2)
  bool pass() const {
    return numerator_is_pure_power && q_nonzero_at_minus_one &&
           l1_matches_odd_square_primes && l2_is_l1_plus_one &&
           h0_is_minus_one && h1_matches && h_top_matches;
  }
};

ConjectureReport check_conjecture(std::int64_t n);

}  // namespace ntf::series
