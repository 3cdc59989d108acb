#pragma once

// Picard lattice of a smooth cubic surface: Pic S = Z^7 with basis l, e1..e6.
// A class is stored as the coefficient vector (a, b1, ..., b6) of
//   D = a*l - b1*e1 - ... - b6*e6,
// so the intersection form is diag(1, -1, -1, -1, -1, -1, -1) in these coordinates.

#include "cubic/errors.hpp"
#include "cubic/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cubic {

inline constexpr int kPicardRank = 7;
inline constexpr int kBlownUpPoints = 6;

template <typename Scalar>
class BasicDivisorClass {
 public:
  using Vector = Eigen::Matrix<Scalar, kPicardRank, 1>;

  BasicDivisorClass() : coeffs_(Vector::Zero()) {}
  explicit BasicDivisorClass(Vector coeffs) : coeffs_(std::move(coeffs)) {}

  /// `b` lists b1..b6; missing trailing entries are zero.
  BasicDivisorClass(Scalar a, std::initializer_list<Scalar> b) : coeffs_(Vector::Zero()) {
    coeffs_(0) = std::move(a);
    int i = 1;
    for (auto const& bi : b) {
      if (i > kBlownUpPoints) break;
      coeffs_(i++) = bi;
    }
  }

  Scalar const& a() const { return coeffs_(0); }
  /// Coefficient of e_i for i in 1..6.
  Scalar const& b(int i) const { return coeffs_(i); }
  Scalar& a() { return coeffs_(0); }
  Scalar& b(int i) { return coeffs_(i); }

  Vector const& coeffs() const { return coeffs_; }
  auto multiplicities() const { return coeffs_.template tail<kBlownUpPoints>(); }

  bool is_zero() const { return coeffs_.isZero(); }

  BasicDivisorClass& operator+=(BasicDivisorClass const& other) {
    coeffs_ += other.coeffs_;
    return *this;
  }
  BasicDivisorClass& operator-=(BasicDivisorClass const& other) {
    coeffs_ -= other.coeffs_;
    return *this;
  }

  friend BasicDivisorClass operator+(BasicDivisorClass lhs, BasicDivisorClass const& rhs) {
    return lhs += rhs;
  }
  friend BasicDivisorClass operator-(BasicDivisorClass lhs, BasicDivisorClass const& rhs) {
    return lhs -= rhs;
  }
  friend BasicDivisorClass operator-(BasicDivisorClass const& d) {
    return BasicDivisorClass(Vector(-d.coeffs_));
  }
  friend BasicDivisorClass operator*(Scalar const& k, BasicDivisorClass const& d) {
    return BasicDivisorClass(Vector(d.coeffs_ * k));
  }

  friend bool operator==(BasicDivisorClass const& x, BasicDivisorClass const& y) {
    return x.coeffs_ == y.coeffs_;
  }

  /// Lexicographic on (a, b1, ..., b6).
  friend std::strong_ordering operator<=>(BasicDivisorClass const& x,
                                          BasicDivisorClass const& y) {
    for (int i = 0; i < kPicardRank; ++i) {
      if (x.coeffs_(i) < y.coeffs_(i)) return std::strong_ordering::less;
      if (y.coeffs_(i) < x.coeffs_(i)) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  Vector coeffs_;
};

/// Product of fixed-size matrices by explicit loops. Eigen's product expressions do not
/// compile with cpp_int scalars.
template <typename Scalar, int R, int K, int C>
Eigen::Matrix<Scalar, R, C> exact_product(Eigen::Matrix<Scalar, R, K> const& x,
                                          Eigen::Matrix<Scalar, K, C> const& y) {
  Eigen::Matrix<Scalar, R, C> out;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < C; ++j) {
      Scalar acc = 0;
      for (int k = 0; k < K; ++k) acc += x(i, k) * y(k, j);
      out(i, j) = acc;
    }
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, kPicardRank, kPicardRank> intersection_form() {
  Eigen::Matrix<Scalar, kPicardRank, kPicardRank> g =
      Eigen::Matrix<Scalar, kPicardRank, kPicardRank>::Zero();
  g(0, 0) = 1;
  for (int i = 1; i < kPicardRank; ++i) g(i, i) = -1;
  return g;
}

template <typename Scalar>
Scalar intersect(BasicDivisorClass<Scalar> const& x, BasicDivisorClass<Scalar> const& y) {
  return x.a() * y.a() - x.multiplicities().dot(y.multiplicities());
}

template <typename Scalar>
Scalar self_intersection(BasicDivisorClass<Scalar> const& d) {
  return intersect(d, d);
}

template <typename Scalar>
BasicDivisorClass<Scalar> canonical() {
  return BasicDivisorClass<Scalar>(-3, {-1, -1, -1, -1, -1, -1});
}

/// K.D = -3a + sum b_i.
template <typename Scalar>
Scalar canonical_pairing(BasicDivisorClass<Scalar> const& d) {
  return d.multiplicities().sum() - 3 * d.a();
}

/// -K.D = 3a - sum b_i; the degree in P^3 under the anticanonical embedding.
template <typename Scalar>
Scalar anticanonical_degree(BasicDivisorClass<Scalar> const& d) {
  return -canonical_pairing(d);
}

template <typename Scalar>
BasicDivisorClass<Scalar> pullback_line() {
  return BasicDivisorClass<Scalar>(1, {});
}

/// e_i for i in 1..6, i.e. (0; 0, .., -1, .., 0).
template <typename Scalar>
BasicDivisorClass<Scalar> exceptional(int i) {
  BasicDivisorClass<Scalar> e;
  e.b(i) = -1;
  return e;
}

inline constexpr int kLineCount = 27;
inline constexpr int kConicCount = 27;

/// The 27 lines in fixed order: e_i; l - e_i - e_j (i < j); 2l - sum_{j != i} e_j.
template <typename Scalar>
std::vector<BasicDivisorClass<Scalar>> const& lines27() {
  static std::vector<BasicDivisorClass<Scalar>> const lines = [] {
    std::vector<BasicDivisorClass<Scalar>> out;
    out.reserve(kLineCount);
    for (int i = 1; i <= 6; ++i) out.push_back(exceptional<Scalar>(i));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        BasicDivisorClass<Scalar> d(1, {});
        d.b(i) = 1;
        d.b(j) = 1;
        out.push_back(d);
      }
    for (int i = 1; i <= 6; ++i) {
      BasicDivisorClass<Scalar> d(2, {1, 1, 1, 1, 1, 1});
      d.b(i) = 0;
      out.push_back(d);
    }
    return out;
  }();
  return lines;
}

/// The 27 conic classes in fixed order: l - e_i; 2l - e_i - e_j - e_k - e_l;
/// 3l - 2e_i - sum_{j != i} e_j.
template <typename Scalar>
std::vector<BasicDivisorClass<Scalar>> const& conics27() {
  static std::vector<BasicDivisorClass<Scalar>> const conics = [] {
    std::vector<BasicDivisorClass<Scalar>> out;
    out.reserve(kConicCount);
    for (int i = 1; i <= 6; ++i) {
      BasicDivisorClass<Scalar> d(1, {});
      d.b(i) = 1;
      out.push_back(d);
    }
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k)
          for (int l = k + 1; l <= 6; ++l) {
            BasicDivisorClass<Scalar> d(2, {});
            d.b(i) = d.b(j) = d.b(k) = d.b(l) = 1;
            out.push_back(d);
          }
    for (int i = 1; i <= 6; ++i) {
      BasicDivisorClass<Scalar> d(3, {1, 1, 1, 1, 1, 1});
      d.b(i) = 2;
      out.push_back(d);
    }
    return out;
  }();
  return conics;
}

/// D.l for every line, in lines27() order. Uses the sparse shape of the line classes.
template <typename Scalar>
std::array<Scalar, kLineCount> pair_with_lines(BasicDivisorClass<Scalar> const& d) {
  std::array<Scalar, kLineCount> out;
  int n = 0;
  for (int i = 1; i <= 6; ++i) out[n++] = d.b(i);
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) out[n++] = d.a() - d.b(i) - d.b(j);
  Scalar const total = d.multiplicities().sum();
  Scalar const twice_a = 2 * d.a();
  for (int i = 1; i <= 6; ++i) out[n++] = twice_a - total + d.b(i);
  return out;
}

template <typename Scalar>
bool is_line_class(BasicDivisorClass<Scalar> const& d) {
  return self_intersection(d) == -1 && canonical_pairing(d) == -1;
}

// --- Weyl group generators -------------------------------------------------

/// Reorders the exceptional coefficients: the new b_i is the old b_{source[i-1]}.
struct Permutation {
  std::array<int, kBlownUpPoints> source{1, 2, 3, 4, 5, 6};

  bool is_identity() const {
    for (int i = 0; i < kBlownUpPoints; ++i)
      if (source[i] != i + 1) return false;
    return true;
  }
  friend bool operator==(Permutation const&, Permutation const&) = default;
};

/// Quadratic transformation centred at the points i, j, k.
struct Cremona {
  int i = 1, j = 2, k = 3;
  friend bool operator==(Cremona const&, Cremona const&) = default;
};

using WeylGenerator = std::variant<Permutation, Cremona>;

template <typename Scalar>
BasicDivisorClass<Scalar> apply(WeylGenerator const& g, BasicDivisorClass<Scalar> const& d) {
  if (auto const* p = std::get_if<Permutation>(&g)) {
    BasicDivisorClass<Scalar> out;
    out.a() = d.a();
    for (int i = 1; i <= kBlownUpPoints; ++i) out.b(i) = d.b(p->source[i - 1]);
    return out;
  }
  auto const& c = std::get<Cremona>(g);
  BasicDivisorClass<Scalar> out = d;
  out.a() = 2 * d.a() - d.b(c.i) - d.b(c.j) - d.b(c.k);
  out.b(c.i) = d.a() - d.b(c.j) - d.b(c.k);
  out.b(c.j) = d.a() - d.b(c.i) - d.b(c.k);
  out.b(c.k) = d.a() - d.b(c.i) - d.b(c.j);
  return out;
}

/// The generator as a 7x7 integer matrix acting on coefficient vectors.
template <typename Scalar>
Eigen::Matrix<Scalar, kPicardRank, kPicardRank> generator_matrix(WeylGenerator const& g) {
  using Matrix = Eigen::Matrix<Scalar, kPicardRank, kPicardRank>;
  Matrix m = Matrix::Zero();
  if (auto const* p = std::get_if<Permutation>(&g)) {
    m(0, 0) = 1;
    for (int i = 1; i <= kBlownUpPoints; ++i) m(i, p->source[i - 1]) = 1;
    return m;
  }
  auto const& c = std::get<Cremona>(g);
  m = Matrix::Identity();
  int const idx[3] = {c.i, c.j, c.k};
  m(0, 0) = 2;
  for (int t : idx) m(0, t) = -1;
  for (int r : idx) {
    m(r, r) = 0;
    m(r, 0) = 1;
    for (int t : idx)
      if (t != r) m(r, t) = -1;
  }
  return m;
}

class WeylWord {
 public:
  WeylWord() = default;
  explicit WeylWord(std::vector<WeylGenerator> generators)
      : generators_(std::move(generators)) {}

  void push_back(WeylGenerator g) { generators_.push_back(std::move(g)); }
  std::vector<WeylGenerator> const& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  std::size_t size() const { return generators_.size(); }

  /// Applies the generators left to right.
  template <typename Scalar>
  BasicDivisorClass<Scalar> apply(BasicDivisorClass<Scalar> d) const {
    for (auto const& g : generators_) d = cubic::apply(g, d);
    return d;
  }

  template <typename Scalar>
  Eigen::Matrix<Scalar, kPicardRank, kPicardRank> matrix() const {
    Eigen::Matrix<Scalar, kPicardRank, kPicardRank> m =
        Eigen::Matrix<Scalar, kPicardRank, kPicardRank>::Identity();
    for (auto const& g : generators_) m = exact_product(generator_matrix<Scalar>(g), m);
    return m;
  }

  friend bool operator==(WeylWord const&, WeylWord const&) = default;

 private:
  std::vector<WeylGenerator> generators_;
};

// --- standard form -----------------------------------------------------------

template <typename Scalar>
bool is_standard(BasicDivisorClass<Scalar> const& d) {
  for (int i = 1; i < kBlownUpPoints; ++i)
    if (d.b(i) < d.b(i + 1)) return false;
  return d.a() >= d.b(1) + d.b(2) + d.b(3);
}

template <typename Scalar>
struct BasicStandardReduction {
  BasicDivisorClass<Scalar> input;
  BasicDivisorClass<Scalar> standard;
  WeylWord word;
};

/// Permutation sorting b descending; ties keep their original order.
template <typename Scalar>
Permutation descending_sort(BasicDivisorClass<Scalar> const& d) {
  Permutation p;
  std::stable_sort(p.source.begin(), p.source.end(),
                   [&](int x, int y) { return d.b(y) < d.b(x); });
  return p;
}

/// Alternates descending sorts and Cremona(1,2,3) until the class is standard.
/// Halts because Cremona strictly lowers a and the W(E6)-orbit is finite.
template <typename Scalar>
BasicStandardReduction<Scalar> reduce_to_standard(BasicDivisorClass<Scalar> const& d) {
  BasicStandardReduction<Scalar> out{d, d, {}};
  auto& cur = out.standard;
  while (true) {
    Permutation const p = descending_sort(cur);
    if (!p.is_identity()) {
      cur = cubic::apply(WeylGenerator(p), cur);
      out.word.push_back(p);
    }
    if (cur.a() >= cur.b(1) + cur.b(2) + cur.b(3)) break;
    cur = cubic::apply(WeylGenerator(Cremona{1, 2, 3}), cur);
    out.word.push_back(Cremona{1, 2, 3});
  }
  return out;
}

template <typename Scalar>
BasicDivisorClass<Scalar> standard_form(BasicDivisorClass<Scalar> const& d) {
  return reduce_to_standard(d).standard;
}

// --- text form "a;b1,b2,b3,b4,b5,b6" ----------------------------------------

template <typename Scalar>
std::string to_string(BasicDivisorClass<Scalar> const& d) {
  std::string out = cubic::to_string(d.a()) + ";";
  for (int i = 1; i <= kBlownUpPoints; ++i) {
    if (i > 1) out += ',';
    out += cubic::to_string(d.b(i));
  }
  return out;
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, BasicDivisorClass<Scalar> const& d) {
  return os << to_string(d);
}

/// Parses "a;b1,...,bn" with exactly `count` entries after the semicolon.
/// Surrounding whitespace and whitespace around separators are accepted.
template <typename Scalar>
std::vector<Scalar> parse_tuple(std::string const& text, int count) {
  std::vector<Scalar> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_integer = [&] {
    skip_ws();
    std::size_t const start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t const digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) throw ParseError(text, digits, "expected integer");
    std::string token = text.substr(start, pos - start);
    if (token[0] == '+') token.erase(0, 1);
    if constexpr (std::is_integral_v<Scalar>) {
      out.push_back(static_cast<Scalar>(std::stoll(token)));
    } else {
      out.emplace_back(Scalar(token));
    }
    skip_ws();
  };
  auto expect = [&](char c, char const* message) {
    if (pos >= text.size() || text[pos] != c) throw ParseError(text, pos, message);
    ++pos;
  };
  read_integer();
  expect(';', "expected ';' after a");
  for (int i = 0; i < count; ++i) {
    if (i > 0) expect(',', "expected ','");
    read_integer();
  }
  if (pos != text.size())
    throw ParseError(text, pos,
                     "unexpected trailing input (expected " + std::to_string(count) +
                         " entries after ';')");
  return out;
}

template <typename Scalar>
BasicDivisorClass<Scalar> parse_class(std::string const& text) {
  auto const values = parse_tuple<Scalar>(text, kBlownUpPoints);
  BasicDivisorClass<Scalar> d;
  d.a() = values[0];
  for (int i = 1; i <= kBlownUpPoints; ++i) d.b(i) = values[i];
  return d;
}

using DivisorClass = BasicDivisorClass<Integer>;
using StandardReduction = BasicStandardReduction<Integer>;

}  // namespace cubic
