#include "ntf/homology.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "ntf/numtheory.hpp"

namespace ntf::homology {

namespace nt = ntf::numtheory;

std::int64_t GradedDims::at(int q, int j) const {
  auto it = dims.find({q, j});
  return it == dims.end() ? 0 : it->second;
}

std::int64_t GradedDims::total(int q) const {
  std::int64_t s = 0;
  for (const auto& [k, d] : dims)
    if (k.first == q) s += d;
  return s;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

namespace {

// Fraction-free elimination; entries stay determinants of submatrices so
// every division is exact. Row and column pivot skipping both preserve that.
std::size_t integer_rank_bareiss(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  Int prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap(a[piv], a[rank]);
    const std::vector<Int>& prow = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::vector<Int>& row = a[i];
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int v = prow[col] * row[j] - row[col] * prow[j];
        mpz_divexact(row[j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = prow[col];
    ++rank;
  }
  return rank;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1u) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1u;
  }
  return r;
}

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // Deterministic for every m < 3.3e24 with these witnesses.
  for (std::uint64_t a :
       {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
        31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::size_t modular_rank_impl(std::vector<std::vector<std::uint64_t>> a,
                              std::uint64_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) std::swap(a[piv], a[rank]);
    const std::uint64_t inv = pow_mod(a[rank][col], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][col], inv, p);
      for (std::size_t j = col; j < cols; ++j) {
        std::uint64_t sub = mul_mod(f, a[rank][j], p);
        a[i][j] = a[i][j] >= sub ? a[i][j] - sub : a[i][j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Work on the orientation with fewer rows; rank is transpose-invariant.
  const bool flip = m.cols() < m.rows();
  const std::size_t rows = flip ? m.cols() : m.rows();
  const std::size_t cols = flip ? m.rows() : m.cols();
  std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    Int scale(1);
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& x = flip ? m.at(j, i) : m.at(i, j);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              x.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& x = flip ? m.at(j, i) : m.at(i, j);
      a[i][j] = x.get_num() * (scale / x.get_den());
    }
  }
  return integer_rank_bareiss(std::move(a));
}

std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p) {
  if (p >= (1ull << 31) || p < 2)
    throw std::invalid_argument("modular rank needs a prime below 2^31");
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const bool flip = m.cols() < m.rows();
  const std::size_t rows = flip ? m.cols() : m.rows();
  const std::size_t cols = flip ? m.rows() : m.cols();
  std::vector<std::vector<std::uint64_t>> a(
      rows, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Rat& x = flip ? m.at(j, i) : m.at(i, j);
      std::uint64_t den = mpz_fdiv_ui(x.get_den().get_mpz_t(), p);
      if (den == 0)
        throw std::domain_error("prime divides an entry denominator");
      std::uint64_t num = mpz_fdiv_ui(x.get_num().get_mpz_t(), p);
      a[i][j] = mul_mod(num, pow_mod(den, p - 2, p), p);
    }
  return modular_rank_impl(std::move(a), p);
}

std::uint64_t random_prime_above(std::uint64_t lower, std::uint64_t seed) {
  if (lower < 2 || lower > (1ull << 30))
    throw std::invalid_argument("prime window must start in [2, 2^30]");
  std::mt19937_64 gen(seed);
  std::uint64_t x = lower + 1 + gen() % lower;
  if (x % 2 == 0) ++x;
  while (!is_prime_u64(x)) x += 2;
  return x;
}

std::vector<Monomial> basis_A(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("basis requires n >= 1");
  const int r = nt::prime_count(n);
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t m = 1; m <= n; ++m) out.push_back(nt::monomial_of(m, r));
  return out;
}

namespace {

// Blocks of one level of a complex, keyed by internal degree. Elements are
// encoded as 64-bit keys so that target lookup in the lower level is a hash
// probe.
struct LevelBlocks {
  std::map<int, std::vector<std::uint64_t>> elems;
  std::map<int, std::unordered_map<std::uint64_t, std::size_t>> index;

  void push(int j, std::uint64_t key) {
    auto& v = elems[j];
    index[j].emplace(key, v.size());
    v.push_back(key);
  }
  std::int64_t dim(int j) const {
    auto it = elems.find(j);
    return it == elems.end() ? 0 : static_cast<std::int64_t>(it->second.size());
  }
};

std::size_t rank_at(const std::map<int, std::size_t>& ranks, int j) {
  auto it = ranks.find(j);
  return it == ranks.end() ? 0 : it->second;
}

GradedDims assemble_homology(const std::vector<LevelBlocks>& levels,
                             const std::vector<std::map<int, std::size_t>>& ranks,
                             int q_max) {
  GradedDims out;
  for (int q = 0; q <= q_max; ++q) {
    for (const auto& [j, elems] : levels[q].elems) {
      std::int64_t dim = static_cast<std::int64_t>(elems.size());
      if (q >= 1) dim -= static_cast<std::int64_t>(rank_at(ranks[q], j));
      if (q + 1 < static_cast<int>(levels.size()))
        dim -= static_cast<std::int64_t>(rank_at(ranks[q + 1], j));
      if (dim != 0) out.dims[{q, j}] = dim;
    }
  }
  return out;
}

}  // namespace

GradedDims koszul_tor_dims(std::int64_t n, int q_max) {
  if (n < 2) throw std::invalid_argument("oracle requires n >= 2");
  const int r = nt::prime_count(n);
  if (q_max < 0 || q_max > r)
    throw std::invalid_argument("q_max must lie in 0..r(n)");
  if (r > 20) throw BudgetError("exterior-complex oracle limited to r <= 20");

  std::vector<std::int64_t> p(static_cast<std::size_t>(r) + 1, 0);
  for (int i = 1; i <= r; ++i) p[i] = nt::nth_prime(i);
  std::vector<int> lam(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t m = 1; m <= n; ++m) lam[m] = nt::lambda(m);

  const auto encode = [](std::int64_t m, std::uint32_t mask) {
    return (static_cast<std::uint64_t>(m) << 32) | mask;
  };

  // Level q holds the pairs (m, S) with |S| = q; internal degree is
  // lambda(m) + |S|.
  const int top = std::min(q_max + 1, r);
  std::vector<LevelBlocks> levels(static_cast<std::size_t>(top) + 1);
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    const int q = std::popcount(mask);
    if (q > top) continue;
    for (std::int64_t m = 1; m <= n; ++m)
      levels[q].push(lam[m] + q, encode(m, mask));
  }

  // ranks[q][j]: rank of the boundary from level q to level q-1 in degree j.
  std::vector<std::map<int, std::size_t>> ranks(levels.size());
  for (int q = 1; q <= top; ++q) {
    for (const auto& [j, colelems] : levels[q].elems) {
      const std::int64_t nrows = levels[q - 1].dim(j);
      if (nrows == 0 || colelems.empty()) continue;
      const auto& rowindex = levels[q - 1].index.at(j);
      ExactMatrix mat(static_cast<std::size_t>(nrows), colelems.size());
      for (std::size_t cidx = 0; cidx < colelems.size(); ++cidx) {
        const std::int64_t m = static_cast<std::int64_t>(colelems[cidx] >> 32);
        const std::uint32_t mask = static_cast<std::uint32_t>(colelems[cidx]);
        int k = 0;
        for (int i = 1; i <= r; ++i) {
          const std::uint32_t bit = 1u << (i - 1);
          if (!(mask & bit)) continue;
          ++k;
          const std::int64_t m2 = p[i] * m;
          if (m2 > n) continue;
          const std::size_t row = rowindex.at(encode(m2, mask ^ bit));
          mat.at(row, cidx) += Rat(k % 2 == 1 ? 1 : -1);
        }
      }
      ranks[q][j] = exact_rank(mat);
    }
  }
  return assemble_homology(levels, ranks, q_max);
}

GradedDims bar_tor_dims(std::int64_t n, int q_max, BarOptions opts) {
  if (n < 2) throw std::invalid_argument("oracle requires n >= 2");
  if (q_max < 0) throw std::invalid_argument("q_max must be >= 0");
  if (opts.mode == RankMode::exact && (n > 8 || q_max > 4))
    throw BudgetError("exact bar ranks limited to n <= 8 and q_max <= 4");
  if (n > 255 || q_max > 6) throw BudgetError("bar oracle size limit");
  double tuples = 1;
  for (int q = 0; q <= q_max; ++q) tuples *= static_cast<double>(n - 1);
  if (tuples > 2e5) throw BudgetError("bar oracle budget exceeded");

  std::vector<int> lam(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t m = 1; m <= n; ++m) lam[m] = nt::lambda(m);

  std::uint64_t prime = 0;
  if (opts.mode == RankMode::modular)
    prime = random_prime_above(1ull << 30, opts.seed);

  // Tuples over the augmentation-ideal basis 2..n, one byte per slot.
  const auto slot = [](std::uint64_t key, int i) {
    return static_cast<std::int64_t>((key >> (8 * i)) & 0xff);
  };

  const int top = q_max + 1;
  std::vector<LevelBlocks> levels(static_cast<std::size_t>(top) + 1);
  levels[0].push(0, 0);
  for (int q = 1; q <= top; ++q) {
    std::vector<std::int64_t> cur(static_cast<std::size_t>(q), 2);
    for (;;) {
      int deg = 0;
      std::uint64_t key = 0;
      for (int i = 0; i < q; ++i) {
        deg += lam[cur[i]];
        key |= static_cast<std::uint64_t>(cur[i]) << (8 * i);
      }
      levels[q].push(deg, key);
      int pos = 0;
      while (pos < q && cur[pos] == n) cur[pos++] = 2;
      if (pos == q) break;
      ++cur[pos];
    }
  }

  // d(a_1 x ... x a_q) = sum_i (-1)^i (... a_i a_{i+1} ...), products in the
  // truncated algebra (zero once the weight passes n).
  std::vector<std::map<int, std::size_t>> ranks(levels.size());
  for (int q = 2; q <= top; ++q) {
    for (const auto& [j, colelems] : levels[q].elems) {
      const std::int64_t nrows = levels[q - 1].dim(j);
      if (nrows == 0 || colelems.empty()) continue;
      const auto& rowindex = levels[q - 1].index.at(j);
      ExactMatrix mat(static_cast<std::size_t>(nrows), colelems.size());
      for (std::size_t cidx = 0; cidx < colelems.size(); ++cidx) {
        const std::uint64_t key = colelems[cidx];
        for (int i = 0; i + 1 < q; ++i) {
          const std::int64_t prod = slot(key, i) * slot(key, i + 1);
          if (prod > n) continue;
          std::uint64_t merged = 0;
          int out = 0;
          for (int s = 0; s < q; ++s) {
            if (s == i + 1) continue;
            const std::int64_t val = s == i ? prod : slot(key, s);
            merged |= static_cast<std::uint64_t>(val) << (8 * out);
            ++out;
          }
          const std::size_t row = rowindex.at(merged);
          mat.at(row, cidx) += Rat(i % 2 == 0 ? -1 : 1);
        }
      }
      ranks[q][j] = opts.mode == RankMode::exact ? exact_rank(mat)
                                                 : modular_rank(mat, prime);
    }
  }
  return assemble_homology(levels, ranks, q_max);
}

}  // namespace ntf::homology
