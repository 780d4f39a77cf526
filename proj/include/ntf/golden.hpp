#pragma once

#include <cstdint>
#include <vector>

namespace ntf::golden {

// Frozen reference tables used by the verification suites and the tests.
// Hand-tabulated; every entry is independently cross-checked at test time
// against the brute-force oracles.

struct CountsRow {
  int n;
  std::int64_t total;
  std::vector<std::int64_t> by_min_support;  // v = 1 .. r(n)
};

struct GradedRow {
  int n;
  int v;
  std::vector<std::int64_t> coeffs;  // counts for d = 2, 3, ...
};

struct SeriesRow {
  int n;
  const char* text;  // canonical "(num)/(den)" form
};

const std::vector<CountsRow>& counts_rows();           // n = 2 .. 30
const std::vector<GradedRow>& graded_rows();           // n = 2 .. 30
const std::vector<SeriesRow>& residue_series();        // n = 2 .. 25
const std::vector<SeriesRow>& residue_series_graded(); // n = 2 .. 24

}  // namespace ntf::golden
