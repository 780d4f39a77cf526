#include "ntf/series.hpp"

#include <stdexcept>

#include "ntf/numtheory.hpp"

namespace ntf::series {

namespace nt = ntf::numtheory;

HilbertSeries hilbert_bigraded(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("hilbert series requires n >= 1");
  BiPoly p;
  for (std::int64_t m = 1; m <= n; ++m)
    p.add_term(nt::lambda(m), static_cast<int>(nt::lambda_tilde(m)), 1);
  return {n, p};
}

BiPoly ek_poincare_ideal(const ideal::GenTable& tab) {
  const BiPoly step = BiPoly(1) + BiPoly::t();
  BiPoly acc;
  for (int v = 1; v <= tab.r; ++v)
    acc += BiPoly(Int(tab.by_min_support[v - 1])) *
           pow(step, static_cast<unsigned>(tab.r - v));
  return acc;
}

BiPoly ek_poincare_ideal(std::int64_t n) {
  return ek_poincare_ideal(ideal::min_gens(n));
}

BiPoly ek_poincare_ideal_graded(const ideal::GenTable& tab) {
  const BiPoly step = BiPoly(1) + BiPoly::t() * BiPoly::u();
  BiPoly acc;
  for (const auto& [vd, count] : tab.by_support_degree) {
    auto [v, d] = vd;
    acc += BiPoly::term(Int(count), 0, d) *
           pow(step, static_cast<unsigned>(tab.r - v));
  }
  return acc;
}

BiPoly ek_poincare_ideal_graded(std::int64_t n) {
  return ek_poincare_ideal_graded(ideal::min_gens(n));
}

std::vector<Int> betti_numbers_ideal(std::int64_t n) {
  BiPoly p = ek_poincare_ideal(n);
  std::vector<Int> betti(static_cast<std::size_t>(p.t_degree()) + 1, 0);
  for (const auto& [k, c] : p.terms()) betti[k.first] = c;
  return betti;
}

RatFn golod_poincare(const ideal::GenTable& tab) {
  BiPoly num = pow(BiPoly(1) + BiPoly::t(), static_cast<unsigned>(tab.r));
  BiPoly den = BiPoly(1) - BiPoly::term(1, 2, 0) * ek_poincare_ideal(tab);
  return ratfn_canonicalize(num, den);
}

RatFn golod_poincare(std::int64_t n) {
  return golod_poincare(ideal::min_gens(n));
}

RatFn golod_poincare_graded(const ideal::GenTable& tab) {
  BiPoly num =
      pow(BiPoly(1) + BiPoly::t() * BiPoly::u(), static_cast<unsigned>(tab.r));
  BiPoly den =
      BiPoly(1) - BiPoly::term(1, 2, 0) * ek_poincare_ideal_graded(tab);
  return ratfn_canonicalize(num, den);
}

RatFn golod_poincare_graded(std::int64_t n) {
  return golod_poincare_graded(ideal::min_gens(n));
}

ConjectureReport check_conjecture(std::int64_t n) {
  ideal::GenTable tab = ideal::min_gens(n);
  RatFn f = golod_poincare(tab);

  ConjectureReport rep;
  rep.n = n;

  BiPoly cofactor = f.num;
  while (auto q = divide_one_plus_t(cofactor)) {
    cofactor = *q;
    rep.l1 += 1;
  }
  rep.numerator_is_pure_power = cofactor == BiPoly(1);

  rep.l2 = f.den.t_degree();
  for (int i = 0; i <= rep.l2; ++i) rep.h.push_back(-f.den.coeff(i, 0));
  rep.q_at_minus_one = -specialize_t(f.den, -1).coeff(0, 0);
  rep.q_nonzero_at_minus_one = rep.q_at_minus_one != 0;

  int odd_square_primes = 0;
  for (std::int64_t p : nt::primes_up_to(n))
    if (p >= 3 && p * p <= n) ++odd_square_primes;
  rep.l1_matches_odd_square_primes = rep.l1 == odd_square_primes;
  rep.l2_is_l1_plus_one = rep.l2 == rep.l1 + 1;
  rep.h0_is_minus_one = !rep.h.empty() && rep.h.front() == -1;
  rep.h1_matches =
      rep.l2 >= 1 && rep.h[1] == Int(nt::prime_count(n)) - rep.l1;
  const Int ceil_half((n + 1) / 2);
  rep.h_top_matches = !rep.h.empty() && rep.h.back() == ceil_half &&
                      Int(tab.by_min_support[0]) == ceil_half;
  return rep;
}

}  // namespace ntf::series
