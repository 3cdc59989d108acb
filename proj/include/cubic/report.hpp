#pragma once

// Structured documents for every engine result: JSON with a fixed key order and the
// census CSV layout.

#include "cubic/census.hpp"
#include "cubic/cohomology.hpp"
#include "cubic/curve.hpp"
#include "cubic/lattice.hpp"
#include "cubic/obstruction.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cubic::report {

using Json = nlohmann::ordered_json;

/// A JSON number when the value fits in 64 bits, otherwise its decimal string.
Json integer(Integer const& v);

Json weyl_word(WeylWord const& w);
Json reduction(StandardReduction const& r);
Json curve_invariants(DivisorClass const& c);
Json cohomology(DivisorClass const& d);
Json normality(CurveReport const& r);
Json verdict(ObstructionVerdict const& v);
Json dim(HilbertDimResult const& r);
Json hilbert_dim(DivisorClass const& c);
Json kleppe(KleppeVerdict const& v);
Json record(CensusRecord const& r);
Json census(CensusResult const& r);

std::vector<std::string> const& census_columns();
std::vector<std::string> census_row(CensusRecord const& r);

/// Header plus one line per record, '\n' terminated.
std::string census_csv(std::vector<CensusRecord> const& records);

std::string verdict_kind(ObstructionVerdict const& v);

}  // namespace cubic::report
