#include "cubic/bareiss.hpp"
#include "cubic/cohomology.hpp"
#include "cubic/oracle.hpp"

#include "test_support.hpp"

#include <boost/multiprecision/gmp.hpp>

using namespace cubic;
using cubic::testing::cls;

namespace {

using boost::multiprecision::mpq_rational;
using boost::multiprecision::mpz_int;
using BigMatrix = Eigen::Matrix<mpz_int, Eigen::Dynamic, Eigen::Dynamic>;

// Gaussian elimination over Q, used as a reference for the fraction-free rank.
Eigen::Index rational_rank(BigMatrix const& m) {
  std::vector<std::vector<mpq_rational>> a(m.rows(), std::vector<mpq_rational>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) a[r][c] = mpq_rational(m(r, c));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a[0].size() && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      mpq_rational const f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return static_cast<Eigen::Index>(rank);
}

BigMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int target_rank) {
  std::uniform_int_distribution<int> entry(-9, 9);
  BigMatrix left(rows, target_rank), right(target_rank, cols), out(rows, cols);
  for (Eigen::Index i = 0; i < left.size(); ++i) left.data()[i] = entry(rng);
  for (Eigen::Index i = 0; i < right.size(); ++i) right.data()[i] = entry(rng);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      mpz_int s = 0;
      for (int k = 0; k < target_rank; ++k) s += left(r, k) * right(k, c);
      out(r, c) = s;
    }
  return out;
}

oracle::RationalPoint pt(std::int64_t x, std::int64_t y) { return {x, 1, y, 1}; }

}  // namespace

TEST_CASE("fraction-free rank agrees with rational elimination") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 200; ++n) {
    int const rows = 1 + static_cast<int>(rng() % 8);
    int const cols = 1 + static_cast<int>(rng() % 8);
    int const target = static_cast<int>(rng() % (std::min(rows, cols) + 1));
    auto const m = random_matrix(rng, rows, cols, std::max(target, 1));
    CHECK(fraction_free_rank(m) == rational_rank(m));
  }
  BigMatrix zero = BigMatrix::Zero(3, 4);
  CHECK(fraction_free_rank(zero) == 0);
  BigMatrix id = BigMatrix::Identity(5, 5);
  CHECK(fraction_free_rank(id) == 5);
}

TEST_CASE("general position") {
  std::array<oracle::RationalPoint, 6> collinear{pt(0, 0), pt(1, 1), pt(2, 2),
                                                 pt(5, 1), pt(-3, 7), pt(4, -2)};
  CHECK_FALSE(oracle::general_position(collinear));
  // Six points on the unit circle x^2 + y^2 = 25.
  std::array<oracle::RationalPoint, 6> conic{pt(5, 0), pt(0, 5), pt(-5, 0),
                                             pt(0, -5), pt(3, 4), pt(4, -3)};
  CHECK_FALSE(oracle::general_position(conic));
  std::array<oracle::RationalPoint, 6> fine{pt(0, 0), pt(1, 0), pt(0, 1),
                                            pt(1, 3), pt(3, 1), pt(7, 2)};
  CHECK(oracle::general_position(fine));
}

TEST_CASE("sampling is deterministic and general") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto const a = oracle::sample_points(seed);
    auto const b = oracle::sample_points(seed);
    CHECK(oracle::general_position(a.points));
    for (int i = 0; i < 6; ++i) {
      CHECK(a.points[i].x_num == b.points[i].x_num);
      CHECK(a.points[i].y_den == b.points[i].y_den);
      CHECK(std::abs(a.points[i].x_num) <= oracle::kNumeratorBound);
      CHECK(a.points[i].x_den >= 1);
      CHECK(a.points[i].x_den <= oracle::kDenominatorBound);
    }
  }
}

TEST_CASE("interpolation on named classes") {
  CHECK(oracle::h0_interpolation(DivisorClass(-canonical<Integer>()), 1) == 4);
  CHECK(oracle::h0_interpolation(cls("1;1,1,0,0,0,0"), 1) == 1);
  CHECK(oracle::h0_interpolation(cls("0;0,0,0,0,-2,-2"), 1) == 1);
  CHECK(oracle::h0_interpolation(cls("2;2,2,0,0,0,0"), 1) == 1);
  CHECK(oracle::h0_interpolation(cls("3;2,2,2,0,0,0"), 1) == 1);
  CHECK(oracle::h0_interpolation(cls("-1;0,0,0,0,0,0"), 1) == 0);
  CHECK(oracle::h0_interpolation(cls("6;2,2,2,2,2,2"), 1) == 10);
}

TEST_CASE("interpolation does not depend on the seed") {
  for (auto const* text : {"4;2,2,1,1,1,0", "5;2,2,2,2,1,1", "3;3,0,0,0,0,0"})
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
      CHECK(oracle::h0_interpolation(cls(text), seed) == h0(cls(text)));
}

TEST_CASE("interpolation matches the engine on a small grid") {
  int checked = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b1 = 0; b1 <= a; ++b1)
      for (int b2 = 0; b2 <= b1; ++b2)
        for (int b5 = -1; b5 <= 1; ++b5) {
          DivisorClass const d(Integer(a), {b1, b2, 1, 1, b5, 0});
          CHECK(oracle::h0_interpolation(d, 7) == h0(d));
          ++checked;
        }
  CHECK(checked > 100);
}
