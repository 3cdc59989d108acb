#include "cubic/report.hpp"

#include <sstream>

namespace cubic::report {

Json integer(Integer const& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.str();
}

Json weyl_word(WeylWord const& w) {
  Json out = Json::array();
  for (auto const& g : w.generators()) {
    if (auto const* p = std::get_if<Permutation>(&g)) {
      out.push_back({{"type", "permutation"}, {"source", p->source}});
    } else {
      auto const& c = std::get<Cremona>(g);
      out.push_back({{"type", "cremona"}, {"points", {c.i, c.j, c.k}}});
    }
  }
  return out;
}

Json reduction(StandardReduction const& r) {
  return {{"input", to_string(r.input)},
          {"standard", to_string(r.standard)},
          {"word", weyl_word(r.word)}};
}

Json curve_invariants(DivisorClass const& c) {
  auto const inv = invariants(c);
  return {{"class", to_string(c)},
          {"degree", integer(inv.degree)},
          {"genus", integer(inv.genus)},
          {"smooth_member", has_smooth_member(c)}};
}

Json cohomology(DivisorClass const& d) {
  auto const t = cubic::cohomology(d);
  Json out = {{"class", to_string(d)},
              {"h0", integer(t.h0)},
              {"h1", integer(t.h1)},
              {"h2", integer(t.h2)},
              {"chi", integer(t.chi)},
              {"nef", is_nef(d)},
              {"effective", is_effective(d)}};
  if (is_effective(d)) {
    auto const z = fixed_part(d);
    Json fixed = Json::array();
    for (auto const& c : z.fixed)
      fixed.push_back({{"line", to_string(c.line)}, {"multiplicity", integer(c.multiplicity)}});
    out["fixed_part"] = {{"nef_part", to_string(z.nef_part)}, {"fixed", fixed}};
  } else {
    out["fixed_part"] = nullptr;
  }
  return out;
}

Json normality(CurveReport const& r) {
  Json ab = Json::object();
  for (auto const& [n, v] : r.abnormality) ab[std::to_string(n)] = integer(v);
  return {{"class", to_string(r.cls)},
          {"degree", integer(r.degree)},
          {"genus", integer(r.genus)},
          {"smooth_member", r.smooth_member},
          {"abnormality", ab},
          {"s_invariant", r.s_invariant},
          {"s_from_cubic", r.s_from_cubic}};
}

namespace {

Json witness(ObstructionVerdict::Obstructed const& w) {
  return {{"witness_line", to_string(w.witness_line)},
          {"m", w.m},
          {"rule", std::string(rule_name(w.rule))}};
}

std::string dim_kind(std::optional<HilbertDimResult> const& r) {
  if (!r) return "none";
  return r->exact ? "exact" : "interval";
}

}  // namespace

std::string verdict_kind(ObstructionVerdict const& v) {
  if (v.obstructed()) return "obstructed";
  if (v.unobstructed()) return "unobstructed";
  return "undetermined";
}

Json verdict(ObstructionVerdict const& v) {
  Json value = {{"kind", verdict_kind(v)}};
  if (v.obstructed()) {
    Json const w = witness(v.witness());
    for (auto const& [k, x] : w.items()) value[k] = x;
  } else if (v.unobstructed()) {
    auto const& u = std::get<ObstructionVerdict::Unobstructed>(v.value);
    value["h1_vanishes"] = u.h1_vanishes;
    value["h2_vanishes"] = u.h2_vanishes;
  } else {
    value["reason"] = std::get<ObstructionVerdict::Undetermined>(v.value).reason;
  }
  Json witnesses = Json::array();
  for (auto const& w : v.witnesses) witnesses.push_back(witness(w));
  return {{"verdict", value},
          {"witnesses", witnesses},
          {"h1", integer(v.h1)},
          {"h2", integer(v.h2)}};
}

Json dim(HilbertDimResult const& r) {
  if (r.exact)
    return {{"kind", "exact"},
            {"value", integer(r.value())},
            {"method", std::string(method_name(r.method))}};
  return {{"kind", "interval"},
          {"lo", integer(r.lo)},
          {"hi", integer(r.hi)},
          {"method", std::string(method_name(r.method))}};
}

Json hilbert_dim(DivisorClass const& c) {
  auto const r = cubic::hilbert_dim(c);
  auto const inv = invariants(c);
  return {{"class", to_string(c)},
          {"degree", integer(inv.degree)},
          {"genus", integer(inv.genus)},
          {"dim", dim(r)},
          {"dim_w", integer(flag_dim(c))},
          {"h1_ic3", integer(abnormality(c, Integer(3)))},
          {"h1_normal", integer(h1_normal(c))},
          {"h0_normal", integer(h0_normal(c))}};
}

Json kleppe(KleppeVerdict const& v) {
  Json out = {{"kind", std::string(kleppe_name(v.kind))}};
  switch (v.kind) {
    case KleppeKind::NotApplicable: out["failed_hypothesis"] = v.failed_hypothesis; break;
    case KleppeKind::ProvenTheorem1: out["dim"] = integer(v.dim); break;
    case KleppeKind::KnownRange: out["range_tag"] = v.range_tag; break;
    case KleppeKind::Open: break;
  }
  return out;
}

Json record(CensusRecord const& r) {
  return {{"tuple", to_string(r.tuple)},
          {"d", integer(r.d)},
          {"g", integer(r.g)},
          {"h1_ic3", integer(r.h1_ic3)},
          {"h2", integer(r.h2)},
          {"normality", r.normality},
          {"verdict", verdict(r.verdict)},
          {"dim", r.dim ? dim(*r.dim) : Json(nullptr)},
          {"kleppe", kleppe(r.kleppe)},
          {"dim_w", integer(r.dim_w)}};
}

Json census(CensusResult const& r) {
  Json records = Json::array();
  for (auto const& rec : r.records) records.push_back(record(rec));
  Json empty = Json::array();
  for (auto const& [d, g] : r.empty_cells) empty.push_back({integer(d), integer(g)});
  return {{"records", records}, {"empty_cells", empty}};
}

std::vector<std::string> const& census_columns() {
  static std::vector<std::string> const columns = {
      "d",      "g",       "a",      "b1",       "b2",     "b3",     "b4",    "b5",
      "b6",     "h1_ic3",  "h2",     "normality", "verdict", "rule", "dim_kind", "dim_lo",
      "dim_hi", "kleppe"};
  return columns;
}

std::vector<std::string> census_row(CensusRecord const& r) {
  std::vector<std::string> row = {r.d.str(), r.g.str(), r.tuple.a().str()};
  for (int i = 1; i <= 6; ++i) row.push_back(r.tuple.b(i).str());
  row.push_back(r.h1_ic3.str());
  row.push_back(r.h2.str());
  row.push_back(std::to_string(r.normality));
  row.push_back(verdict_kind(r.verdict));
  row.push_back(r.verdict.obstructed() ? std::string(rule_name(r.verdict.witness().rule)) : "");
  row.push_back(dim_kind(r.dim));
  row.push_back(r.dim ? r.dim->lo.str() : "");
  row.push_back(r.dim ? r.dim->hi.str() : "");
  row.push_back(std::string(kleppe_name(r.kleppe.kind)));
  return row;
}

std::string census_csv(std::vector<CensusRecord> const& records) {
  std::ostringstream out;
  auto line = [&](std::vector<std::string> const& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(census_columns());
  for (auto const& r : records) line(census_row(r));
  return out.str();
}

}  // namespace cubic::report
