// Acceptance suite: every release-blocking requirement, one line of output
// per criterion. Criteria with a stated time budget fail when they run over.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ntf/cli.hpp"
#include "ntf/exactalg.hpp"
#include "ntf/gamma.hpp"
#include "ntf/golden.hpp"
#include "ntf/homology.hpp"
#include "ntf/ideal.hpp"
#include "ntf/numtheory.hpp"
#include "ntf/series.hpp"

namespace nt = ntf::numtheory;
namespace id = ntf::ideal;
namespace se = ntf::series;
namespace ho = ntf::homology;
namespace ga = ntf::gamma;
using ntf::BiPoly;
using ntf::Int;
using ntf::Monomial;
using ntf::Rat;
using ntf::RatFn;

namespace {

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++checks_failed;
    std::cerr << "    check failed: " << what << "\n";
  }
}

std::string golden_path(const std::string& name) {
  return std::string(NTF_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return "<missing file: " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string run_cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = ntf::cli::run(args, out, err);
  if (code != nullptr) *code = c;
  return out.str();
}

// 1. counts for n = 2..30 equal the reference table, through the CLI as well.
void criterion_counts() {
  for (const auto& row : ntf::golden::counts_rows()) {
    auto tab = id::min_gens(row.n);
    expect(tab.total() == row.total, "total count n=" + std::to_string(row.n));
    expect(tab.by_min_support == row.by_min_support,
           "per-support counts n=" + std::to_string(row.n));
  }
  int code = 0;
  std::string csv = run_cli({"counts", "--nmax", "30", "--format", "csv"}, &code);
  expect(code == 0, "counts exit status");
  expect(csv == read_file(golden_path("counts_nmax30.csv")),
         "counts CSV bytes");
}

// 2. graded counts for n = 2..30 equal the reference table.
void criterion_graded_counts() {
  std::vector<id::GenTable> tables;
  for (std::int64_t n = 2; n <= 30; ++n) tables.push_back(id::min_gens(n));
  std::set<std::pair<int, int>> covered;
  for (const auto& row : ntf::golden::graded_rows()) {
    const auto& tab = tables[static_cast<std::size_t>(row.n - 2)];
    covered.insert({row.n, row.v});
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      int d = static_cast<int>(i) + 2;
      auto it = tab.by_support_degree.find({row.v, d});
      std::int64_t have = it == tab.by_support_degree.end() ? 0 : it->second;
      expect(have == row.coeffs[i], "graded count n=" + std::to_string(row.n) +
                                        " v=" + std::to_string(row.v) +
                                        " d=" + std::to_string(d));
    }
  }
  // the reference rows cover every populated (n, v) cell
  for (const auto& tab : tables)
    for (const auto& [vd, c] : tab.by_support_degree)
      expect(covered.count({static_cast<int>(tab.n), vd.first}) == 1,
             "uncovered cell n=" + std::to_string(tab.n));
}

// 3. the worked level-5 example, exact in all four outputs.
void criterion_level5() {
  auto tab = id::min_gens(5);
  std::set<Monomial> expected = {Monomial({3}),       Monomial({1, 1}),
                                 Monomial({1, 0, 1}), Monomial({0, 2}),
                                 Monomial({0, 1, 1}), Monomial({0, 0, 2})};
  expect(std::set<Monomial>(tab.gens.begin(), tab.gens.end()) == expected,
         "generator set");

  expect(se::ek_poincare_ideal(tab) ==
             BiPoly(6) + BiPoly::term(8, 1, 0) + BiPoly::term(3, 2, 0),
         "ideal series");

  RatFn plain = se::golod_poincare(tab);
  expect(plain.num == BiPoly(1) &&
             plain.den == BiPoly(1) - BiPoly::term(3, 1, 0),
         "residue series");

  RatFn graded = se::golod_poincare_graded(tab);
  BiPoly gden = BiPoly(1) - BiPoly::term(2, 1, 1) - BiPoly::term(2, 2, 2) -
                BiPoly::term(1, 2, 3);
  expect(graded.num == BiPoly(1) + BiPoly::t() * BiPoly::u() &&
             graded.den == gden,
         "graded residue series");
}

// 4. residue series tables: plain for n = 2..25, graded for n = 2..24; the
//    graded n = 25 value is emitted and pinned by its u = 1 specialization.
void criterion_series_tables() {
  for (const auto& row : ntf::golden::residue_series())
    expect(format_canonical(se::golod_poincare(row.n)) == row.text,
           "series n=" + std::to_string(row.n));
  for (const auto& row : ntf::golden::residue_series_graded())
    expect(format_canonical(se::golod_poincare_graded(row.n)) == row.text,
           "graded series n=" + std::to_string(row.n));
  RatFn g25 = se::golod_poincare_graded(25);
  expect(!format_canonical(g25).empty(), "graded series n=25 emitted");
  RatFn back = ntf::ratfn_canonicalize(specialize_u(g25.num),
                                       specialize_u(g25.den));
  expect(back == se::golod_poincare(25), "graded n=25 specializes at u=1");
}

// 5. exterior-complex oracle: homology ranks equal the closed-form numbers
//    for 2 <= n <= 12, with graded agreement for n <= 9.
void criterion_koszul_oracle() {
  for (std::int64_t n = 2; n <= 12; ++n) {
    const int r = nt::prime_count(n);
    auto dims = ho::koszul_tor_dims(n, r);
    auto betti = se::betti_numbers_ideal(n);
    expect(dims.total(0) == 1, "unit in degree 0, n=" + std::to_string(n));
    for (int q = 1; q <= r; ++q) {
      Int expected = q - 1 < static_cast<int>(betti.size()) ? betti[q - 1] : 0;
      expect(Int(dims.total(q)) == expected,
             "rank q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
    if (n <= 9) {
      BiPoly graded = se::ek_poincare_ideal_graded(n);
      int umax = graded.u_degree();
      for (int q = 1; q <= r; ++q)
        for (int j = 0; j <= umax + 1; ++j)
          expect(Int(dims.at(q, j)) == graded.coeff(q - 1, j),
                 "graded slice q=" + std::to_string(q) +
                     " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  }
}

// 6. bar-complex oracle: exact for 2 <= n <= 6 with q <= 4 including graded
//    slices; modular agreement for 7 <= n <= 10 with q <= 3.
void criterion_bar_oracle() {
  for (std::int64_t n = 2; n <= 6; ++n) {
    const int q_top = 4;
    auto dims = ho::bar_tor_dims(n, q_top);
    auto tab = id::min_gens(n);
    auto plain = series_expand(se::golod_poincare(tab), q_top);
    auto graded = series_expand(se::golod_poincare_graded(tab), q_top);
    for (int q = 0; q <= q_top; ++q) {
      expect(Int(dims.total(q)) == plain[q].coeff(0, 0),
             "bar rank q=" + std::to_string(q) + " n=" + std::to_string(n));
      int umax = graded[q].u_degree();
      for (int j = 0; j <= umax + 1; ++j)
        expect(Int(dims.at(q, j)) == graded[q].coeff(0, j),
               "bar graded slice q=" + std::to_string(q) +
                   " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  }
  ho::BarOptions opts;
  opts.mode = ho::RankMode::modular;
  opts.seed = 20260810;
  for (std::int64_t n = 7; n <= 10; ++n) {
    const int q_top = 3;
    auto dims = ho::bar_tor_dims(n, q_top, opts);
    auto tab = id::min_gens(n);
    auto plain = series_expand(se::golod_poincare(tab), q_top);
    auto graded = series_expand(se::golod_poincare_graded(tab), q_top);
    for (int q = 0; q <= q_top; ++q) {
      expect(Int(dims.total(q)) == plain[q].coeff(0, 0),
             "modular bar rank q=" + std::to_string(q) +
                 " n=" + std::to_string(n));
      int umax = graded[q].u_degree();
      for (int j = 0; j <= umax + 1; ++j)
        expect(Int(dims.at(q, j)) == graded[q].coeff(0, j),
               "modular bar graded slice q=" + std::to_string(q) +
                   " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
  }
}

// 7. the two generator algorithms agree as tables for 2 <= n <= 500.
void criterion_generator_oracle() {
  for (std::int64_t n = 2; n <= 500; ++n) {
    auto a = id::min_gens(n);
    auto b = id::min_gens_brute(n);
    expect(a.gens == b.gens, "generator sets n=" + std::to_string(n));
    expect(a.by_min_support == b.by_min_support &&
               a.by_support_degree == b.by_support_degree,
           "generator counts n=" + std::to_string(n));
  }
}

// 8. count identities and dimension identities for 2 <= n <= 500.
void criterion_theorems() {
  std::vector<std::int64_t> prev;
  std::vector<std::int64_t> tail_dev(4, 1), tail_dev_graded(4, 1);
  for (std::int64_t n = 2; n <= 500; ++n) {
    auto tab = id::min_gens(n);
    const int r = tab.r;
    expect(static_cast<int>(tab.by_min_support.size()) == r,
           "support range n=" + std::to_string(n));
    for (int v = 1; v <= r; ++v)
      expect(tab.by_min_support[static_cast<std::size_t>(r - v)] >= v,
             "lower bound v=" + std::to_string(v) + " n=" + std::to_string(n));
    expect(tab.total() >= static_cast<std::int64_t>(r) * (r + 1) / 2,
           "total lower bound n=" + std::to_string(n));
    if (n % 2 == 0 && n > 2)
      expect(tab.by_min_support == prev,
             "even level repeats counts n=" + std::to_string(n));
    expect(tab.by_min_support[0] == (n + 1) / 2,
           "ceil(n/2) count n=" + std::to_string(n));
    for (const auto& [vd, c] : tab.by_support_degree)
      expect(vd.second >= 2, "degree >= 2, n=" + std::to_string(n));
    for (int v = 1; v <= 3; ++v) {
      const int idx = 1 + r - v;
      std::int64_t cv =
          (idx >= 1 && idx <= r) ? tab.by_min_support[idx - 1] : 0;
      if (cv != v) tail_dev[v] = n;
      std::int64_t cvd2 = 0;
      bool other = false;
      for (const auto& [vd, c] : tab.by_support_degree)
        if (vd.first == idx) {
          if (vd.second == 2)
            cvd2 = c;
          else
            other = true;
        }
      if (cvd2 != v || other) tail_dev_graded[v] = n;
    }
    prev = tab.by_min_support;
  }
  for (int v = 1; v <= 3; ++v) {
    expect(tail_dev[v] <= 450, "count tail settles, v=" + std::to_string(v) +
                                   " last deviation n=" +
                                   std::to_string(tail_dev[v]));
    expect(tail_dev_graded[v] <= 450,
           "graded tail settles, v=" + std::to_string(v) +
               " last deviation n=" + std::to_string(tail_dev_graded[v]));
  }
  for (std::int64_t n = 1; n <= 500; ++n) {
    auto h = se::hilbert_bigraded(n);
    expect(h.poly.sum_of_coeffs() == n,
           "dimension equals n, n=" + std::to_string(n));
    expect(specialize_u(h.poly).coeff(1, 0) == nt::prime_count(n),
           "linear coefficient equals prime count, n=" + std::to_string(n));
  }
}

// 9. convolution algebra: ring laws, inverses, norms, truncation tower.
void criterion_gamma() {
  std::mt19937_64 gen(424242);
  auto random_fn = [&gen](int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    ga::TruncFn f(n);
    for (int m = 1; m <= n; ++m) {
      Rat v(num(gen), den(gen));
      v.canonicalize();
      f.set(m, v);
    }
    return f;
  };

  std::uniform_int_distribution<int> level(2, 50);
  for (int trial = 0; trial < 15; ++trial) {
    int n = level(gen);
    auto f = random_fn(n), g = random_fn(n), h = random_fn(n);
    expect(ga::convolve(f, g) == ga::convolve(g, f), "commutativity");
    expect(ga::convolve(ga::convolve(f, g), h) ==
               ga::convolve(f, ga::convolve(g, h)),
           "associativity");
    expect(ga::convolve(f, g + h) ==
               ga::convolve(f, g) + ga::convolve(f, h),
           "distributivity");
    expect(ga::convolve(ga::epsilon(n), f) == f, "unit law");
  }

  for (int n = 1; n <= 200; ++n)
    expect(ga::convolve(ga::moebius_fn(n), ga::nu0(n)) == ga::epsilon(n),
           "moebius inverts the constant function, n=" + std::to_string(n));
  expect(ga::invert(ga::nu0(200)) == ga::moebius_fn(200),
         "inverse of the constant function");

  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_fn(30), g = random_fn(30);
    if (f.is_zero() || g.is_zero()) continue;
    std::int64_t nf = ga::norm_N(f), ng = ga::norm_N(g);
    if (nf * ng <= 30)
      expect(ga::norm_N(ga::convolve(f, g)) == nf * ng,
             "norm multiplicativity");
    if (f.at(1) != 0)
      expect(ga::convolve(f, ga::invert(f)) == ga::epsilon(30),
             "unit inversion");
  }

  auto f30 = random_fn(30);
  auto g30 = random_fn(30);
  for (int n2 = 1; n2 <= 30; ++n2) {
    for (int n1 = 1; n1 <= n2; ++n1)
      expect(ga::truncate(ga::truncate(f30, n2), n1) == ga::truncate(f30, n1),
             "tower coherence");
    expect(ga::truncate(ga::convolve(f30, g30), n2) ==
               ga::convolve(ga::truncate(f30, n2), ga::truncate(g30, n2)),
           "truncation is a ring map");
  }
}

// 10. conjecture scan through n = 60: no clause failures anywhere and the
//     anchored levels hold exactly.
void criterion_conjecture() {
  int code = 0;
  std::string out = run_cli({"conjecture", "--nmax", "60"}, &code);
  expect(code == 0, "conjecture exit status");
  expect(out.find("failures=0/59") != std::string::npos, "zero failures");
  for (std::int64_t n = 2; n <= 60; ++n)
    expect(se::check_conjecture(n).pass(),
           "conjecture clauses n=" + std::to_string(n));

  auto r9 = se::check_conjecture(9);
  expect(r9.l1 == 1 && r9.h == std::vector<Int>{-1, 3, 5}, "anchor n=9");
  auto r25 = se::check_conjecture(25);
  expect(r25.l1 == 2 && r25.h == std::vector<Int>{-1, 7, 22, 13},
         "anchor n=25");
  auto r2 = se::check_conjecture(2);
  expect(r2.l1 == 0 && r2.h == std::vector<Int>{-1, 1}, "anchor n=2");
}

struct Criterion {
  int number;
  const char* label;
  std::function<void()> fn;
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counts table n=2..30 (reference + CLI bytes)", criterion_counts, 1.0},
      {2, "graded counts table n=2..30", criterion_graded_counts, 0.0},
      {3, "worked level-5 example", criterion_level5, 0.0},
      {4, "residue series tables n=2..25 / n=2..24", criterion_series_tables,
       0.0},
      {5, "exterior-complex oracle n=2..12 (graded n<=9)",
       criterion_koszul_oracle, 120.0},
      {6, "bar-complex oracle exact n=2..6, modular n=7..10",
       criterion_bar_oracle, 600.0},
      {7, "generator algorithms agree n=2..500", criterion_generator_oracle,
       30.0},
      {8, "count and dimension identities n<=500", criterion_theorems, 0.0},
      {9, "convolution algebra laws", criterion_gamma, 0.0},
      {10, "conjecture scan n<=60", criterion_conjecture, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    int before = checks_failed;
    auto start = std::chrono::steady_clock::now();
    c.fn();
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = checks_failed == before;
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      std::cerr << "    over budget: " << secs << "s > " << c.budget_seconds
                << "s\n";
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                c.number, c.label, secs);
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failed);
  return 1;
}
