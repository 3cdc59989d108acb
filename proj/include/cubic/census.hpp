#pragma once

// Enumeration of the 3-maximal families W(a; b1..b6) of smooth connected space curves
// on smooth cubic surfaces, and batch classification of each family.

#include "cubic/lattice.hpp"
#include "cubic/obstruction.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cubic {

struct CensusRecord {
  DivisorClass tuple;  // standard form
  Integer d;
  Integer g;
  Integer h1_ic3;  // h1(I_C(3))
  Integer h2;      // h0(C + 4K) = h2(S, -L)
  int normality = 0;  // largest n <= 3 such that C is m-normal for every m in 1..n
  ObstructionVerdict verdict;
  std::optional<HilbertDimResult> dim;  // absent when d <= 9
  KleppeVerdict kleppe;
  Integer dim_w;  // d + g + 18
};

/// Standard tuples with a > b1, b6 >= 0 and degree d, sorted lexicographically.
std::vector<DivisorClass> enumerate_degree(Integer const& d);

/// Every family W(a; b1..b6) of degree d and genus g, sorted lexicographically.
std::vector<DivisorClass> enumerate_families(Integer const& d, Integer const& g);

CensusRecord make_record(DivisorClass const& tuple);

struct CensusResult {
  std::vector<CensusRecord> records;  // by d, then g, then tuple
  std::vector<std::pair<Integer, Integer>> empty_cells;  // (d, g) within the Hodge range
};

/// All families with d in [d_min, d_max] and g in [g_min, g_max]. The result does not
/// depend on `threads`.
CensusResult census_range(Integer const& d_min, Integer const& d_max, Integer const& g_min,
                          Integer const& g_max, unsigned threads = 1);

}  // namespace cubic
