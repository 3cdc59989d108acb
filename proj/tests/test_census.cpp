#include "cubic/census.hpp"
#include "cubic/report.hpp"

#include "test_support.hpp"

#include <algorithm>

using namespace cubic;
using cubic::testing::cls;

namespace {

bool contains(std::vector<DivisorClass> const& v, DivisorClass const& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

// Brute force: a <= d because d = 3a - sum b >= a on standard classes.
std::vector<DivisorClass> brute_force_degree(int d) {
  std::vector<DivisorClass> out;
  for (int a = 1; a <= d; ++a) {
    std::array<int, 6> b{};
    for (int idx = 0;; ++idx) {
      int t = idx;
      for (int i = 0; i < 6; ++i) {
        b[i] = t % a;
        t /= a;
      }
      if (t > 0) break;
      bool ok = std::is_sorted(b.rbegin(), b.rend()) && a >= b[0] + b[1] + b[2];
      int sum = 0;
      for (int x : b) sum += x;
      if (ok && 3 * a - sum == d) {
        DivisorClass c(Integer(a), {});
        for (int i = 0; i < 6; ++i) c.b(i + 1) = b[i];
        out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Errc error_code(auto&& f) {
  try {
    f();
  } catch (PreconditionError const& e) {
    return e.code();
  }
  FAIL("no exception");
  return Errc::InvalidRange;
}

}  // namespace

TEST_CASE("families of a given degree and genus") {
  CHECK(contains(enumerate_families(Integer(16), Integer(29)), cls("12;4,4,4,4,2,2")));
  CHECK(contains(enumerate_families(Integer(14), Integer(24)), cls("12;4,4,4,4,4,2")));
  CHECK(enumerate_families(Integer(3), Integer(1)) ==
        std::vector<DivisorClass>{cls("3;1,1,1,1,1,1")});
  CHECK(enumerate_families(Integer(3), Integer(0)) ==
        std::vector<DivisorClass>{cls("1;0,0,0,0,0,0")});
  auto const top = enumerate_families(Integer(30), Integer(72));
  CHECK(top.size() == 23);
  CHECK(top.front() == cls("14;2,2,2,2,2,2"));

  for (Integer g = 0; g <= 10; ++g)
    for (auto const& c : enumerate_families(Integer(8), g)) {
      CHECK(invariants(c) == CurveInvariants{8, g});
      CHECK(is_standard(c));
      CHECK(has_smooth_member(c));
    }
}

TEST_CASE("degree enumeration matches a brute-force search") {
  for (int d = 1; d <= 10; ++d) {
    auto const expected = brute_force_degree(d);
    auto const filtered = [&] {
      std::vector<DivisorClass> v;
      for (auto const& c : expected)
        if (c.a() > c.b(1)) v.push_back(c);
      return v;
    }();
    CHECK(enumerate_degree(Integer(d)) == filtered);
  }
}

TEST_CASE("families round trip through the class of one member") {
  std::mt19937_64 rng(67);
  for (int n = 0; n < 200; ++n) {
    auto const c = standard_form(testing::random_class(rng, 4, 25, 0, 8));
    if (!has_smooth_member(c)) continue;
    auto const inv = invariants(c);
    auto const fams = enumerate_families(inv.degree, inv.genus);
    CHECK(contains(fams, c));
    CHECK(std::is_sorted(fams.begin(), fams.end()));
  }
}

TEST_CASE("argument checks") {
  CHECK(error_code([] { enumerate_families(Integer(10), Integer(1000)); }) ==
        Errc::GenusOutOfHodgeRange);
  CHECK(error_code([] { enumerate_families(Integer(10), Integer(-1)); }) ==
        Errc::GenusOutOfHodgeRange);
  CHECK(error_code([] { enumerate_families(Integer(0), Integer(0)); }) ==
        Errc::NonPositiveDegree);
  CHECK(error_code([] { census_range(Integer(5), Integer(3), Integer(0), Integer(3)); }) ==
        Errc::InvalidRange);
  CHECK(error_code([] { census_range(Integer(3), Integer(5), Integer(4), Integer(2)); }) ==
        Errc::InvalidRange);
}

TEST_CASE("census records") {
  auto const r = make_record(cls("14;2,2,2,2,2,2"));
  CHECK(r.d == 30);
  CHECK(r.g == 72);
  CHECK(r.h1_ic3 == 6);
  CHECK(r.h2 == 6);
  CHECK(r.normality == 2);
  CHECK(r.verdict.obstructed());
  REQUIRE(r.dim);
  CHECK(r.dim->value() == 120);
  CHECK(r.kleppe.kind == KleppeKind::ProvenTheorem1);
  CHECK(r.dim_w == 120);

  auto const small = make_record(cls("3;1,1,1,1,1,1"));
  CHECK_FALSE(small.dim);
  CHECK(small.normality == 3);
}

TEST_CASE("census is independent of the thread count") {
  auto const one = census_range(Integer(10), Integer(14), Integer(0), Integer(40), 1);
  auto const four = census_range(Integer(10), Integer(14), Integer(0), Integer(40), 4);
  CHECK(report::census_csv(one.records) == report::census_csv(four.records));
  CHECK(one.empty_cells == four.empty_cells);
  CHECK_FALSE(one.records.empty());

  for (auto const& rec : one.records) {
    CHECK(rec.g <= hodge_genus_bound(rec.d));
    CHECK(rec.dim_w == rec.d + rec.g + 18);
    if (rec.kleppe.kind == KleppeKind::ProvenTheorem1) {
      CHECK(rec.verdict.obstructed());
      REQUIRE(rec.dim);
      CHECK(rec.dim->exact);
      CHECK(rec.dim->value() == rec.dim_w);
    }
  }
  for (auto const& [d, g] : one.empty_cells) {
    CHECK(enumerate_families(d, g).empty());
    CHECK(g <= hodge_genus_bound(d));
  }
  // Records are sorted by degree, genus and tuple.
  CHECK(std::is_sorted(one.records.begin(), one.records.end(), [](auto const& x, auto const& y) {
    return std::tie(x.d, x.g, x.tuple) < std::tie(y.d, y.g, y.tuple);
  }));
}

TEST_CASE("census CSV layout") {
  auto const res = census_range(Integer(16), Integer(16), Integer(29), Integer(29));
  auto const csv = report::census_csv(res.records);
  auto const header = csv.substr(0, csv.find('\n'));
  std::string joined;
  for (auto const& c : report::census_columns()) joined += (joined.empty() ? "" : ",") + c;
  CHECK(header == joined);
  CHECK(csv.find("16,29,12,4,4,4,4,2,2,2,1,2,obstructed,m=1,exact,64,64") != std::string::npos);
  CHECK(csv.back() == '\n');
}
