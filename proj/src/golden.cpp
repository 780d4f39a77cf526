#include "ntf/golden.hpp"

namespace ntf::golden {

// Reference values for n = 2..30 resp. n = 2..25. Hand-tabulated once and
// frozen; the test suites recompute every entry from scratch and the
// brute-force oracles cross-check the closed forms against these tables.

const std::vector<CountsRow>& counts_rows() {
  static const std::vector<CountsRow> rows = {
      {2, 1, {1}},
      {3, 3, {2, 1}},
      {4, 3, {2, 1}},
      {5, 6, {3, 2, 1}},
      {6, 6, {3, 2, 1}},
      {7, 10, {4, 3, 2, 1}},
      {8, 10, {4, 3, 2, 1}},
      {9, 11, {5, 3, 2, 1}},
      {10, 11, {5, 3, 2, 1}},
      {11, 16, {6, 4, 3, 2, 1}},
      {12, 16, {6, 4, 3, 2, 1}},
      {13, 22, {7, 5, 4, 3, 2, 1}},
      {14, 22, {7, 5, 4, 3, 2, 1}},
      {15, 23, {8, 5, 4, 3, 2, 1}},
      {16, 23, {8, 5, 4, 3, 2, 1}},
      {17, 30, {9, 6, 5, 4, 3, 2, 1}},
      {18, 30, {9, 6, 5, 4, 3, 2, 1}},
      {19, 38, {10, 7, 6, 5, 4, 3, 2, 1}},
      {20, 38, {10, 7, 6, 5, 4, 3, 2, 1}},
      {21, 39, {11, 7, 6, 5, 4, 3, 2, 1}},
      {22, 39, {11, 7, 6, 5, 4, 3, 2, 1}},
      {23, 48, {12, 8, 7, 6, 5, 4, 3, 2, 1}},
      {24, 48, {12, 8, 7, 6, 5, 4, 3, 2, 1}},
      {25, 50, {13, 9, 7, 6, 5, 4, 3, 2, 1}},
      {26, 50, {13, 9, 7, 6, 5, 4, 3, 2, 1}},
      {27, 51, {14, 9, 7, 6, 5, 4, 3, 2, 1}},
      {28, 51, {14, 9, 7, 6, 5, 4, 3, 2, 1}},
      {29, 61, {15, 10, 8, 7, 6, 5, 4, 3, 2, 1}},
      {30, 61, {15, 10, 8, 7, 6, 5, 4, 3, 2, 1}},
  };
  return rows;
}

// coeffs lists the generator counts by total degree d = 2, 3, ... for fixed
// minimal support v.
const std::vector<GradedRow>& graded_rows() {
  static const std::vector<GradedRow> rows = {
      {2, 1, {1}},

      {3, 1, {2}},
      {3, 2, {1}},

      {4, 1, {1, 1}},
      {4, 2, {1}},

      {5, 1, {2, 1}},
      {5, 2, {2}},
      {5, 3, {1}},

      {6, 1, {1, 2}},
      {6, 2, {2}},
      {6, 3, {1}},

      {7, 1, {2, 2}},
      {7, 2, {3}},
      {7, 3, {2}},
      {7, 4, {1}},

      {8, 1, {2, 1, 1}},
      {8, 2, {3}},
      {8, 3, {2}},
      {8, 4, {1}},

      {9, 1, {2, 2, 1}},
      {9, 2, {2, 1}},
      {9, 3, {2}},
      {9, 4, {1}},

      {10, 1, {1, 3, 1}},
      {10, 2, {2, 1}},
      {10, 3, {2}},
      {10, 4, {1}},

      {11, 1, {2, 3, 1}},
      {11, 2, {3, 1}},
      {11, 3, {3}},
      {11, 4, {2}},
      {11, 5, {1}},

      {12, 1, {2, 2, 2}},
      {12, 2, {3, 1}},
      {12, 3, {3}},
      {12, 4, {2}},
      {12, 5, {1}},

      {13, 1, {3, 2, 2}},
      {13, 2, {4, 1}},
      {13, 3, {4}},
      {13, 4, {3}},
      {13, 5, {2}},
      {13, 6, {1}},

      {14, 1, {2, 3, 2}},
      {14, 2, {4, 1}},
      {14, 3, {4}},
      {14, 4, {3}},
      {14, 5, {2}},
      {14, 6, {1}},

      {15, 1, {2, 4, 2}},
      {15, 2, {3, 2}},
      {15, 3, {4}},
      {15, 4, {3}},
      {15, 5, {2}},
      {15, 6, {1}},

      {16, 1, {2, 4, 1, 1}},
      {16, 2, {3, 2}},
      {16, 3, {4}},
      {16, 4, {3}},
      {16, 5, {2}},
      {16, 6, {1}},

      {17, 1, {3, 4, 1, 1}},
      {17, 2, {4, 2}},
      {17, 3, {5}},
      {17, 4, {4}},
      {17, 5, {3}},
      {17, 6, {2}},
      {17, 7, {1}},

      {18, 1, {3, 3, 2, 1}},
      {18, 2, {4, 2}},
      {18, 3, {5}},
      {18, 4, {4}},
      {18, 5, {3}},
      {18, 6, {2}},
      {18, 7, {1}},

      {19, 1, {4, 3, 2, 1}},
      {19, 2, {5, 2}},
      {19, 3, {6}},
      {19, 4, {5}},
      {19, 5, {4}},
      {19, 6, {3}},
      {19, 7, {2}},
      {19, 8, {1}},

      {20, 1, {4, 2, 3, 1}},
      {20, 2, {5, 2}},
      {20, 3, {6}},
      {20, 4, {5}},
      {20, 5, {4}},
      {20, 6, {3}},
      {20, 7, {2}},
      {20, 8, {1}},

      {21, 1, {4, 3, 3, 1}},
      {21, 2, {4, 3}},
      {21, 3, {6}},
      {21, 4, {5}},
      {21, 5, {4}},
      {21, 6, {3}},
      {21, 7, {2}},
      {21, 8, {1}},

      {22, 1, {3, 4, 3, 1}},
      {22, 2, {4, 3}},
      {22, 3, {6}},
      {22, 4, {5}},
      {22, 5, {4}},
      {22, 6, {3}},
      {22, 7, {2}},
      {22, 8, {1}},

      {23, 1, {4, 4, 3, 1}},
      {23, 2, {5, 3}},
      {23, 3, {7}},
      {23, 4, {6}},
      {23, 5, {5}},
      {23, 6, {4}},
      {23, 7, {3}},
      {23, 8, {2}},
      {23, 9, {1}},

      {24, 1, {4, 4, 2, 2}},
      {24, 2, {5, 3}},
      {24, 3, {7}},
      {24, 4, {6}},
      {24, 5, {5}},
      {24, 6, {4}},
      {24, 7, {3}},
      {24, 8, {2}},
      {24, 9, {1}},

      {25, 1, {4, 5, 2, 2}},
      {25, 2, {5, 4}},
      {25, 3, {6, 1}},
      {25, 4, {6}},
      {25, 5, {5}},
      {25, 6, {4}},
      {25, 7, {3}},
      {25, 8, {2}},
      {25, 9, {1}},

      {26, 1, {3, 6, 2, 2}},
      {26, 2, {5, 4}},
      {26, 3, {6, 1}},
      {26, 4, {6}},
      {26, 5, {5}},
      {26, 6, {4}},
      {26, 7, {3}},
      {26, 8, {2}},
      {26, 9, {1}},

      {27, 1, {3, 6, 3, 2}},
      {27, 2, {5, 3, 1}},
      {27, 3, {6, 1}},
      {27, 4, {6}},
      {27, 5, {5}},
      {27, 6, {4}},
      {27, 7, {3}},
      {27, 8, {2}},
      {27, 9, {1}},

      {28, 1, {3, 5, 4, 2}},
      {28, 2, {5, 3, 1}},
      {28, 3, {6, 1}},
      {28, 4, {6}},
      {28, 5, {5}},
      {28, 6, {4}},
      {28, 7, {3}},
      {28, 8, {2}},
      {28, 9, {1}},

      {29, 1, {4, 5, 4, 2}},
      {29, 2, {6, 3, 1}},
      {29, 3, {7, 1}},
      {29, 4, {7}},
      {29, 5, {6}},
      {29, 6, {5}},
      {29, 7, {4}},
      {29, 8, {3}},
      {29, 9, {2}},
      {29, 10, {1}},

      {30, 1, {4, 4, 5, 2}},
      {30, 2, {6, 3, 1}},
      {30, 3, {7, 1}},
      {30, 4, {7}},
      {30, 5, {6}},
      {30, 6, {5}},
      {30, 7, {4}},
      {30, 8, {3}},
      {30, 9, {2}},
      {30, 10, {1}},
  };
  return rows;
}

// Residue-field series, sign-normalized so the denominator constant is +1.
const std::vector<SeriesRow>& residue_series() {
  static const std::vector<SeriesRow> rows = {
      {2, "(1)/(1 - t)"},
      {3, "(1)/(1 - 2*t)"},
      {4, "(1)/(1 - 2*t)"},
      {5, "(1)/(1 - 3*t)"},
      {6, "(1)/(1 - 3*t)"},
      {7, "(1)/(1 - 4*t)"},
      {8, "(1)/(1 - 4*t)"},
      {9, "(1 + t)/(1 - 3*t - 5*t^2)"},
      {10, "(1 + t)/(1 - 3*t - 5*t^2)"},
      {11, "(1 + t)/(1 - 4*t - 6*t^2)"},
      {12, "(1 + t)/(1 - 4*t - 6*t^2)"},
      {13, "(1 + t)/(1 - 5*t - 7*t^2)"},
      {14, "(1 + t)/(1 - 5*t - 7*t^2)"},
      {15, "(1 + t)/(1 - 5*t - 8*t^2)"},
      {16, "(1 + t)/(1 - 5*t - 8*t^2)"},
      {17, "(1 + t)/(1 - 6*t - 9*t^2)"},
      {18, "(1 + t)/(1 - 6*t - 9*t^2)"},
      {19, "(1 + t)/(1 - 7*t - 10*t^2)"},
      {20, "(1 + t)/(1 - 7*t - 10*t^2)"},
      {21, "(1 + t)/(1 - 7*t - 11*t^2)"},
      {22, "(1 + t)/(1 - 7*t - 11*t^2)"},
      {23, "(1 + t)/(1 - 8*t - 12*t^2)"},
      {24, "(1 + t)/(1 - 8*t - 12*t^2)"},
      {25, "(1 + 2*t + t^2)/(1 - 7*t - 22*t^2 - 13*t^3)"},
  };
  return rows;
}

const std::vector<SeriesRow>& residue_series_graded() {
  static const std::vector<SeriesRow> rows = {
      {2, "(1)/(1 - t*u)"},
      {3, "(1)/(1 - 2*t*u)"},
      {4, "(1 + t*u)/(1 - t*u - t^2*u^2 - t^2*u^3)"},
      {5, "(1 + t*u)/(1 - 2*t*u - 2*t^2*u^2 - t^2*u^3)"},
      {6, "(1 + t*u)/(1 - 2*t*u - t^2*u^2 - 2*t^2*u^3)"},
      {7, "(1 + t*u)/(1 - 3*t*u - 2*t^2*u^2 - 2*t^2*u^3)"},
      {8, "(1 + t*u)/(1 - 3*t*u - 2*t^2*u^2 - t^2*u^3 - t^2*u^4)"},
      {9,
       "(1 + 2*t*u + t^2*u^2)/(1 - 2*t*u - 4*t^2*u^2 - 3*t^2*u^3 - t^2*u^4 - "
       "2*t^3*u^3 - 2*t^3*u^4 - t^3*u^5)"},
      {10,
       "(1 + 2*t*u + t^2*u^2)/(1 - 2*t*u - 3*t^2*u^2 - 4*t^2*u^3 - t^2*u^4 - "
       "t^3*u^3 - 3*t^3*u^4 - t^3*u^5)"},
      {11,
       "(1 + 2*t*u + t^2*u^2)/(1 - 3*t*u - 5*t^2*u^2 - 4*t^2*u^3 - t^2*u^4 - "
       "2*t^3*u^3 - 3*t^3*u^4 - t^3*u^5)"},
      {12,
       "(1 + 2*t*u + t^2*u^2)/(1 - 3*t*u - 5*t^2*u^2 - 3*t^2*u^3 - 2*t^2*u^4 "
       "- 2*t^3*u^3 - 2*t^3*u^4 - 2*t^3*u^5)"},
      {13,
       "(1 + 2*t*u + t^2*u^2)/(1 - 4*t*u - 7*t^2*u^2 - 3*t^2*u^3 - 2*t^2*u^4 "
       "- 3*t^3*u^3 - 2*t^3*u^4 - 2*t^3*u^5)"},
      {14,
       "(1 + 2*t*u + t^2*u^2)/(1 - 4*t*u - 6*t^2*u^2 - 4*t^2*u^3 - 2*t^2*u^4 "
       "- 2*t^3*u^3 - 3*t^3*u^4 - 2*t^3*u^5)"},
      {15,
       "(1 + 2*t*u + t^2*u^2)/(1 - 4*t*u - 5*t^2*u^2 - 6*t^2*u^3 - 2*t^2*u^4 "
       "- 2*t^3*u^3 - 4*t^3*u^4 - 2*t^3*u^5)"},
      {16,
       "(1 + 2*t*u + t^2*u^2)/(1 - 4*t*u - 5*t^2*u^2 - 6*t^2*u^3 - t^2*u^4 - "
       "t^2*u^5 - 2*t^3*u^3 - 4*t^3*u^4 - t^3*u^5 - t^3*u^6)"},
      {17,
       "(1 + 2*t*u + t^2*u^2)/(1 - 5*t*u - 7*t^2*u^2 - 6*t^2*u^3 - t^2*u^4 - "
       "t^2*u^5 - 3*t^3*u^3 - 4*t^3*u^4 - t^3*u^5 - t^3*u^6)"},
      {18,
       "(1 + 2*t*u + t^2*u^2)/(1 - 5*t*u - 7*t^2*u^2 - 5*t^2*u^3 - 2*t^2*u^4 "
       "- t^2*u^5 - 3*t^3*u^3 - 3*t^3*u^4 - 2*t^3*u^5 - t^3*u^6)"},
      {19,
       "(1 + 2*t*u + t^2*u^2)/(1 - 6*t*u - 9*t^2*u^2 - 5*t^2*u^3 - 2*t^2*u^4 "
       "- t^2*u^5 - 4*t^3*u^3 - 3*t^3*u^4 - 2*t^3*u^5 - t^3*u^6)"},
      {20,
       "(1 + 2*t*u + t^2*u^2)/(1 - 6*t*u - 9*t^2*u^2 - 4*t^2*u^3 - 3*t^2*u^4 "
       "- t^2*u^5 - 4*t^3*u^3 - 2*t^3*u^4 - 3*t^3*u^5 - t^3*u^6)"},
      {21,
       "(1 + 2*t*u + t^2*u^2)/(1 - 6*t*u - 8*t^2*u^2 - 6*t^2*u^3 - 3*t^2*u^4 "
       "- t^2*u^5 - 4*t^3*u^3 - 3*t^3*u^4 - 3*t^3*u^5 - t^3*u^6)"},
      {22,
       "(1 + 2*t*u + t^2*u^2)/(1 - 6*t*u - 7*t^2*u^2 - 7*t^2*u^3 - 3*t^2*u^4 "
       "- t^2*u^5 - 3*t^3*u^3 - 4*t^3*u^4 - 3*t^3*u^5 - t^3*u^6)"},
      {23,
       "(1 + 2*t*u + t^2*u^2)/(1 - 7*t*u - 9*t^2*u^2 - 7*t^2*u^3 - 3*t^2*u^4 "
       "- t^2*u^5 - 4*t^3*u^3 - 4*t^3*u^4 - 3*t^3*u^5 - t^3*u^6)"},
      {24,
       "(1 + 2*t*u + t^2*u^2)/(1 - 7*t*u - 9*t^2*u^2 - 7*t^2*u^3 - 2*t^2*u^4 "
       "- 2*t^2*u^5 - 4*t^3*u^3 - 4*t^3*u^4 - 2*t^3*u^5 - 2*t^3*u^6)"},
  };
  return rows;
}

}  // namespace ntf::golden
