#include "cubic/lattice.hpp"

#include "test_support.hpp"

#include <set>

using namespace cubic;
using cubic::testing::cls;

namespace {

Integer dot(DivisorClass const& x, DivisorClass const& y) { return intersect(x, y); }

DivisorClass K() { return canonical<Integer>(); }

template <typename M>
bool same(M const& x, M const& y) {
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      if (x(r, c) != y(r, c)) return false;
  return true;
}

template <typename M>
bool is_identity(M const& x) {
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c)
      if (x(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

// Independent solver: every (a; b) in a box with the given square and canonical degree.
std::set<std::string> solve_box(int square, int k_dot, int a_lo, int a_hi, int b_bound) {
  std::set<std::string> out;
  std::array<int, 6> b{};
  for (int a = a_lo; a <= a_hi; ++a) {
    for (int idx = 0;; ++idx) {
      int t = idx, sum = 0, sumsq = 0;
      for (int i = 0; i < 6; ++i) {
        b[i] = t % (2 * b_bound + 1) - b_bound;
        t /= 2 * b_bound + 1;
        sum += b[i];
        sumsq += b[i] * b[i];
      }
      if (t > 0) break;
      if (a * a - sumsq == square && sum - 3 * a == k_dot) {
        std::string s = std::to_string(a) + ";";
        for (int i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(b[i]);
        out.insert(s);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("intersection form") {
  CHECK(dot(K(), K()) == 3);
  CHECK(self_intersection(exceptional<Integer>(1)) == -1);
  CHECK(dot(cls("12;4,4,4,4,2,2"), exceptional<Integer>(6)) == 2);
  CHECK(dot(-K(), -K()) == 3);
  CHECK(to_string(K()) == "-3;-1,-1,-1,-1,-1,-1");

  std::mt19937_64 rng(5);
  for (int n = 0; n < 200; ++n) {
    auto const x = testing::random_class(rng, -9, 9, -9, 9);
    auto const y = testing::random_class(rng, -9, 9, -9, 9);
    auto const z = testing::random_class(rng, -9, 9, -9, 9);
    CHECK(dot(x, y) == dot(y, x));
    CHECK(dot(x + Integer(3) * y, z) == dot(x, z) + 3 * dot(y, z));
    Integer expected = x.a() * y.a();
    for (int i = 1; i <= 6; ++i) expected -= x.b(i) * y.b(i);
    CHECK(dot(x, y) == expected);
    CHECK(canonical_pairing(x) == dot(K(), x));
    CHECK(anticanonical_degree(x) == -canonical_pairing(x));
  }
}

TEST_CASE("lines and conics") {
  auto const& lines = lines27<Integer>();
  auto const& conics = conics27<Integer>();
  REQUIRE(lines.size() == 27);
  REQUIRE(conics.size() == 27);

  for (auto const& l : lines) {
    CHECK(self_intersection(l) == -1);
    CHECK(canonical_pairing(l) == -1);
    CHECK(dot(-K(), l) == 1);
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto const x = dot(lines[i], lines[j]);
      CHECK((x == 0 || x == 1));
    }

  // Enumeration order: e_i, then l - e_i - e_j, then 2l - sum_{j != i} e_j.
  CHECK(lines[0] == exceptional<Integer>(1));
  CHECK(lines[5] == exceptional<Integer>(6));
  CHECK(lines[6] == cls("1;1,1,0,0,0,0"));
  CHECK(lines[20] == cls("1;0,0,0,0,1,1"));
  CHECK(lines[21] == cls("2;0,1,1,1,1,1"));
  CHECK(lines[26] == cls("2;1,1,1,1,1,0"));
  CHECK(conics[0] == cls("1;1,0,0,0,0,0"));
  CHECK(conics[6] == cls("2;1,1,1,1,0,0"));
  CHECK(conics[21] == cls("3;2,1,1,1,1,1"));

  std::set<DivisorClass> line_set(lines.begin(), lines.end());
  for (auto const& q : conics) {
    CHECK(self_intersection(q) == 0);
    CHECK(canonical_pairing(q) == -2);
    CHECK(line_set.count(DivisorClass(-K() - q)) == 1);
  }
  CHECK(dot(cls("1;0,0,0,0,0,1"), exceptional<Integer>(6)) == 1);
}

TEST_CASE("bounded exhaustive search recovers exactly the 27 lines and 27 conics") {
  std::set<std::string> listed_lines, listed_conics;
  for (auto const& l : lines27<Integer>()) listed_lines.insert(to_string(l));
  for (auto const& q : conics27<Integer>()) listed_conics.insert(to_string(q));
  CHECK(solve_box(-1, -1, -3, 5, 3) == listed_lines);
  CHECK(solve_box(0, -2, -3, 5, 3) == listed_conics);
}

TEST_CASE("is_line_class") {
  for (auto const& l : lines27<Integer>()) CHECK(is_line_class(l));
  CHECK_FALSE(is_line_class(cls("1;1,0,0,0,0,0")));
  CHECK_FALSE(is_line_class(K()));
  CHECK_FALSE(is_line_class(DivisorClass()));
}

TEST_CASE("standard form") {
  CHECK(is_standard(cls("12;4,4,4,4,2,2")));
  CHECK_FALSE(is_standard(cls("1;1,1,0,0,0,0")));
  CHECK(is_standard(cls("0;0,0,0,0,0,-1")));

  auto const r = reduce_to_standard(cls("1;1,1,0,0,0,0"));
  CHECK(r.standard == cls("0;0,0,0,0,0,-1"));
  CHECK(r.word.apply(r.input) == r.standard);

  auto const fixed = reduce_to_standard(cls("12;4,4,4,4,2,2"));
  CHECK(fixed.standard == fixed.input);
  CHECK(fixed.word.empty());
  CHECK(standard_form(K()) == K());

  for (auto const& l : lines27<Integer>()) CHECK(standard_form(l) == cls("0;0,0,0,0,0,-1"));
}

TEST_CASE("descending sort is stable") {
  auto const p = descending_sort(cls("5;1,3,3,0,3,1"));
  CHECK(p.source == std::array<int, 6>{2, 3, 5, 1, 6, 4});
  CHECK(descending_sort(cls("5;2,2,2,2,2,2")).is_identity());
}

TEST_CASE("reduction preserves invariants, replays, and is idempotent") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 2000; ++n) {
    auto const d = testing::random_class(rng, -15, 25, -10, 12);
    auto const r = reduce_to_standard(d);
    REQUIRE(is_standard(r.standard));
    CHECK(self_intersection(r.standard) == self_intersection(d));
    CHECK(canonical_pairing(r.standard) == canonical_pairing(d));
    CHECK(r.word.apply(d) == r.standard);
    auto const again = reduce_to_standard(r.standard);
    CHECK(again.standard == r.standard);
    CHECK(again.word.empty());
  }
}

TEST_CASE("Weyl generators are isometries fixing K") {
  auto const q = intersection_form<Integer>();
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    auto const w = testing::random_word(rng, 6);
    auto const m = w.matrix<Integer>();
    Eigen::Matrix<Integer, kPicardRank, kPicardRank> mt;
    mt = m.transpose();
    CHECK(same(exact_product(mt, exact_product(q, m)), q));
    CHECK(w.apply(K()) == K());
    auto const x = testing::random_class(rng, -9, 9, -9, 9);
    auto const y = testing::random_class(rng, -9, 9, -9, 9);
    CHECK(dot(w.apply(x), w.apply(y)) == dot(x, y));
    CHECK(same(exact_product(m, x.coeffs()), w.apply(x).coeffs()));
  }
  auto const c = generator_matrix<Integer>(Cremona{1, 2, 3});
  CHECK(is_identity(exact_product(c, c)));
}

TEST_CASE("Cremona formula") {
  auto const out = cubic::apply(WeylGenerator(Cremona{1, 2, 3}), cls("1;1,1,0,0,0,0"));
  CHECK(out == cls("0;0,0,-1,0,0,0"));
  auto const g = cubic::apply(WeylGenerator(Cremona{2, 4, 6}), cls("10;1,2,3,4,5,6"));
  CHECK(g == cls("8;1,0,3,2,5,4"));
}

TEST_CASE("arbitrary precision coefficients") {
  auto const big = parse_class<Integer>("1000000000000000000000000;1,0,0,0,0,0");
  CHECK(self_intersection(big) == boost::multiprecision::pow(Integer(10), 48) - 1);
  CHECK(to_string(big) == "1000000000000000000000000;1,0,0,0,0,0");
}

TEST_CASE("text form") {
  CHECK(to_string(cls(" 12 ; 4,4, 4,4,2,2 ")) == "12;4,4,4,4,2,2");
  CHECK(to_string(cls("-3;-1,-1,-1,-1,-1,-1")) == "-3;-1,-1,-1,-1,-1,-1");
  std::ostringstream os;
  os << cls("1;1,1,0,0,0,0");
  CHECK(os.str() == "1;1,1,0,0,0,0");

  auto position = [](std::string const& text) {
    try {
      parse_class<Integer>(text);
    } catch (ParseError const& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("12;4,4,4,4,2") == 12);
  CHECK(position("12,4,4,4,4,2,2") == 2);
  CHECK(position("x;0,0,0,0,0,0") == 0);
  CHECK(position("1;0,0,0,0,0,0,0") == 13);
  CHECK(position("1;0,0,a,0,0,0") == 6);
  CHECK(position("") == 0);

  try {
    parse_class<Integer>("12;4,4,q,4,2,2");
    FAIL("no exception");
  } catch (ParseError const& e) {
    auto const text = e.annotated();
    CHECK(text.find("12;4,4,q,4,2,2") != std::string::npos);
    CHECK(text.find("\n         ^ expected integer") != std::string::npos);
  }
}
