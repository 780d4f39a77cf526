#include "ntf/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntf/numtheory.hpp"

namespace ntf::ideal {

namespace nt = ntf::numtheory;

namespace {

GenTable table_from(std::int64_t n, int r,
                    std::vector<std::pair<std::int64_t, Monomial>> weighted) {
  std::sort(weighted.begin(), weighted.end());
  GenTable tab;
  tab.n = n;
  tab.r = r;
  tab.by_min_support.assign(static_cast<std::size_t>(r), 0);
  tab.gens.reserve(weighted.size());
  for (auto& [w, g] : weighted) {
    int v = g.min_support();
    tab.by_min_support[v - 1] += 1;
    tab.by_support_degree[{v, g.total_degree()}] += 1;
    tab.gens.push_back(std::move(g));
  }
  return tab;
}

}  // namespace

bool in_ideal(const Monomial& m, std::int64_t n) {
  return nt::weight(m) > n;
}

GenTable min_gens(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("generator table requires n >= 2");
  const int r = nt::prime_count(n);
  std::vector<std::pair<std::int64_t, Monomial>> acc;
  for (int v = 1; v <= r; ++v) {
    const std::int64_t pv = nt::nth_prime(v);
    // x = 1 counts as having no prime factor below anything.
    for (std::int64_t x = n / pv + 1; x <= n; ++x) {
      if (x > 1 && nt::smallest_prime_factor(x) < pv) continue;
      acc.emplace_back(pv * x, nt::monomial_of(pv * x, r));
    }
  }
  return table_from(n, r, std::move(acc));
}

GenTable min_gens_brute(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("generator table requires n >= 2");
  const int r = nt::prime_count(n);
  const std::int64_t pr = nt::nth_prime(r);
  std::vector<std::pair<std::int64_t, Monomial>> acc;
  for (std::int64_t y = n + 1; y <= n * pr; ++y) {
    std::int64_t p = nt::smallest_prime_factor(y);
    if (p == y) continue;      // a prime above n lies outside the ring
    if (y > n * p) continue;   // dividing out spf(y) must leave the ideal
    acc.emplace_back(y, nt::monomial_of(y, r));
  }
  return table_from(n, r, std::move(acc));
}

std::map<std::pair<int, int>, std::int64_t> graded_counts(std::int64_t n) {
  return min_gens(n).by_support_degree;
}

bool is_strongly_stable_reversed(std::int64_t n) {
  GenTable tab = min_gens(n);
  for (const Monomial& g : tab.gens)
    for (int i : g.support())
      for (int j = i; j <= tab.r; ++j)
        if (!in_ideal(g.div_var(i).times_var(j), n)) return false;
  return true;
}

bool generates_up_to_bound(const std::vector<Monomial>& gens, std::int64_t n,
                           int r) {
  const std::int64_t pr = nt::nth_prime(r);
  std::vector<std::int64_t> gw;
  gw.reserve(gens.size());
  for (const Monomial& g : gens) gw.push_back(nt::weight(g));
  // Monomial divisibility is weight divisibility, so the scan runs over
  // the integers in the window whose prime factors fit in the ring.
  for (std::int64_t w = n + 1; w <= n * pr; ++w) {
    auto parts = nt::factorize(w).parts;
    if (!parts.empty() && parts.back().index > r) continue;
    bool covered = false;
    for (std::int64_t d : gw)
      if (w % d == 0) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace ntf::ideal
