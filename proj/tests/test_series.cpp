#include <doctest.h>

#include <map>

#include "ntf/golden.hpp"
#include "ntf/numtheory.hpp"
#include "ntf/series.hpp"

namespace se = ntf::series;
namespace id = ntf::ideal;
namespace nt = ntf::numtheory;
using ntf::BiPoly;
using ntf::Int;
using ntf::RatFn;

namespace {
const BiPoly t = BiPoly::t();
const BiPoly u = BiPoly::u();
}  // namespace

TEST_CASE("hilbert_bigraded") {
  CHECK(se::hilbert_bigraded(1).poly == BiPoly(1));

  // n = 5: (lambda, lambda_tilde) over m = 1..5 is
  // (0,0), (1,2), (1,3), (2,4), (1,5)
  BiPoly expect = BiPoly(1) + BiPoly::term(1, 1, 2) + BiPoly::term(1, 1, 3) +
                  BiPoly::term(1, 1, 5) + BiPoly::term(1, 2, 4);
  CHECK(se::hilbert_bigraded(5).poly == expect);
  CHECK(specialize_u(expect) ==
        BiPoly(1) + BiPoly::term(3, 1, 0) + BiPoly::term(1, 2, 0));

  for (std::int64_t n = 1; n <= 200; ++n) {
    auto h = se::hilbert_bigraded(n);
    CHECK(h.poly.sum_of_coeffs() == n);
    CHECK(h.poly.coeff(0, 0) == 1);
    CHECK(specialize_u(h.poly).coeff(1, 0) == nt::prime_count(n));
  }

  // the one-variable specializations count lambda resp. lambda_tilde fibers
  for (std::int64_t n : {10, 60, 100, 200}) {
    auto h = se::hilbert_bigraded(n);
    BiPoly by_lambda = specialize_u(h.poly);
    BiPoly by_tilde = specialize_t(h.poly);
    std::map<int, Int> dcount, ecount;
    for (std::int64_t m = 1; m <= n; ++m) {
      dcount[nt::lambda(m)] += 1;
      ecount[static_cast<int>(nt::lambda_tilde(m))] += 1;
    }
    for (const auto& [i, c] : dcount) CHECK(by_lambda.coeff(i, 0) == c);
    for (const auto& [j, c] : ecount) CHECK(by_tilde.coeff(0, j) == c);
    CHECK(static_cast<int>(dcount.size()) ==
          static_cast<int>(by_lambda.terms().size()));
    CHECK(static_cast<int>(ecount.size()) ==
          static_cast<int>(by_tilde.terms().size()));
  }
}

TEST_CASE("ek_poincare_ideal") {
  CHECK(se::ek_poincare_ideal(5) ==
        BiPoly(6) + BiPoly::term(8, 1, 0) + BiPoly::term(3, 2, 0));
  CHECK(se::ek_poincare_ideal(2) == BiPoly(1));
  CHECK(se::ek_poincare_ideal(3) == BiPoly(3) + BiPoly::term(2, 1, 0));
}

TEST_CASE("ek_poincare_ideal_graded") {
  BiPoly expect5 = BiPoly::term(5, 0, 2) + BiPoly::term(1, 0, 3) +
                   BiPoly::term(6, 1, 3) + BiPoly::term(2, 1, 4) +
                   BiPoly::term(2, 2, 4) + BiPoly::term(1, 2, 5);
  CHECK(se::ek_poincare_ideal_graded(5) == expect5);
  CHECK(se::ek_poincare_ideal_graded(2) == BiPoly::term(1, 0, 2));
  for (std::int64_t n = 2; n <= 100; ++n)
    CHECK(specialize_u(se::ek_poincare_ideal_graded(n)) ==
          se::ek_poincare_ideal(n));
}

TEST_CASE("betti_numbers_ideal") {
  CHECK(se::betti_numbers_ideal(5) == std::vector<Int>{6, 8, 3});
  CHECK(se::betti_numbers_ideal(2) == std::vector<Int>{1});
  CHECK(se::betti_numbers_ideal(9) == std::vector<Int>{11, 23, 18, 5});

  // independent route: beta_q = sum over v of C_{n,v} * binom(r - v, q)
  for (std::int64_t n = 2; n <= 200; ++n) {
    auto tab = id::min_gens(n);
    auto betti = se::betti_numbers_ideal(n);
    for (int q = 0; q < static_cast<int>(betti.size()); ++q) {
      Int expect = 0;
      for (int v = 1; v <= tab.r; ++v) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(tab.r - v),
                     static_cast<unsigned long>(q));
        expect += Int(tab.by_min_support[v - 1]) * b;
      }
      CHECK(betti[q] == expect);
    }
  }
}

TEST_CASE("golod_poincare") {
  RatFn f5 = se::golod_poincare(5);
  CHECK(f5.num == BiPoly(1));
  CHECK(f5.den == BiPoly(1) - BiPoly::term(3, 1, 0));

  RatFn f9 = se::golod_poincare(9);
  CHECK(ntf::format_canonical(f9) == "(1 + t)/(1 - 3*t - 5*t^2)");

  RatFn g5 = se::golod_poincare_graded(5);
  CHECK(g5.num == BiPoly(1) + t * u);
  CHECK(g5.den == BiPoly(1) - BiPoly::term(2, 1, 1) - BiPoly::term(2, 2, 2) -
                      BiPoly::term(1, 2, 3));

  // the graded series specialized at u = 1 recovers the plain series
  for (std::int64_t n = 2; n <= 60; ++n) {
    RatFn graded = se::golod_poincare_graded(n);
    RatFn back = ntf::ratfn_canonicalize(specialize_u(graded.num),
                                         specialize_u(graded.den));
    CHECK(back == se::golod_poincare(n));
  }
}

TEST_CASE("golod series match the reference tables") {
  for (const auto& row : ntf::golden::residue_series())
    CHECK(ntf::format_canonical(se::golod_poincare(row.n)) == row.text);
  for (const auto& row : ntf::golden::residue_series_graded())
    CHECK(ntf::format_canonical(se::golod_poincare_graded(row.n)) == row.text);
}

TEST_CASE("reference count tables agree with both generator algorithms") {
  for (const auto& row : ntf::golden::counts_rows()) {
    auto a = id::min_gens(row.n);
    auto b = id::min_gens_brute(row.n);
    CHECK(a.total() == row.total);
    CHECK(a.by_min_support == row.by_min_support);
    CHECK(b.total() == row.total);
    CHECK(b.by_min_support == row.by_min_support);
  }
  for (const auto& row : ntf::golden::graded_rows()) {
    auto tab = id::min_gens(row.n);
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      int d = static_cast<int>(i) + 2;
      auto it = tab.by_support_degree.find({row.v, d});
      std::int64_t have =
          it == tab.by_support_degree.end() ? 0 : it->second;
      CHECK(have == row.coeffs[i]);
    }
  }
}

TEST_CASE("check_conjecture anchors") {
  auto r9 = se::check_conjecture(9);
  CHECK(r9.l1 == 1);
  CHECK(r9.l2 == 2);
  CHECK(r9.h == std::vector<Int>{-1, 3, 5});
  CHECK(r9.pass());

  auto r25 = se::check_conjecture(25);
  CHECK(r25.l1 == 2);
  CHECK(r25.h == std::vector<Int>{-1, 7, 22, 13});
  CHECK(r25.h[1] == Int(nt::prime_count(25)) - 2);
  CHECK(r25.h[3] == 13);
  CHECK(r25.pass());

  auto r2 = se::check_conjecture(2);
  CHECK(r2.l1 == 0);
  CHECK(r2.l2 == 1);
  CHECK(r2.h == std::vector<Int>{-1, 1});
  CHECK(r2.pass());
}

TEST_CASE("conjecture scan") {
  for (std::int64_t n = 2; n <= 60; ++n) {
    auto rep = se::check_conjecture(n);
    CHECK(rep.pass());
    CHECK(rep.q_at_minus_one != 0);
  }
}
