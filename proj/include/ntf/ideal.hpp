#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ntf/monomial.hpp"

namespace ntf::ideal {

// Minimal generating set of the level-n weight ideal together with the
// counts split by minimal support index v and by total degree d.
struct GenTable {
  std::int64_t n = 0;
  int r = 0;                             // number of variables
  std::vector<Monomial> gens;            // ascending weight
  std::vector<std::int64_t> by_min_support;  // [v-1] = count with min support v
  std::map<std::pair<int, int>, std::int64_t> by_support_degree;  // (v, d)
  std::int64_t total() const { return static_cast<std::int64_t>(gens.size()); }
};

// Membership: weight(m) > n.
bool in_ideal(const Monomial& m, std::int64_t n);

// Generators via the per-support integer windows: for each v, the integers
// x with n/p_v < x <= n whose prime factors are all >= p_v give x_v * mono(x).
GenTable min_gens(std::int64_t n);

// Independent route: scan y in (n, n*p_r] and keep the composite y with
// y <= n * spf(y); the generator is the monomial of weight y.
GenTable min_gens_brute(std::int64_t n);

// The (v, d) count table of min_gens(n).
std::map<std::pair<int, int>, std::int64_t> graded_counts(std::int64_t n);

// Verifies the exchange property on every generator: for g in the table,
// i in supp(g) and i <= j <= r, the monomial g * x_j / x_i stays in the ideal.
bool is_strongly_stable_reversed(std::int64_t n);

// True when every monomial of weight in (n, p_r * n] is divisible by some
// element of gens; exposes candidate generating sets that are incomplete.
bool generates_up_to_bound(const std::vector<Monomial>& gens, std::int64_t n,
                           int r);

}  // namespace ntf::ideal
