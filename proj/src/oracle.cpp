#include "cubic/oracle.hpp"

#include "cubic/bareiss.hpp"
#include "cubic/errors.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <algorithm>
#include <random>
#include <vector>

namespace cubic::oracle {
namespace {

using Big = boost::multiprecision::mpz_int;
using BigMatrix = Eigen::Matrix<Big, Eigen::Dynamic, Eigen::Dynamic>;

struct Homogeneous {
  std::int64_t x, y, z;
};

Homogeneous homogenize(RationalPoint const& p) {
  return {p.x_num * p.y_den, p.y_num * p.x_den, p.x_den * p.y_den};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Rank modulo the prime 2^61 - 1. Any minor that is nonzero mod p is nonzero over Z, so
// this never exceeds the rational rank.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % kPrime);
}

std::uint64_t to_mod(std::int64_t v) {
  std::int64_t const r = v % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

std::uint64_t inverse_mod(std::uint64_t x) {
  std::uint64_t result = 1, base = x, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

Eigen::Index modular_rank(std::vector<std::vector<std::uint64_t>> m) {
  Eigen::Index rank = 0;
  std::size_t const rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<Eigen::Index>(rows); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    std::uint64_t const inv = inverse_mod(m[rank][col]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      std::uint64_t const f = mul_mod(m[r][col], inv);
      for (std::size_t c = col; c < cols; ++c)
        m[r][c] = (m[r][c] + kPrime - mul_mod(f, m[rank][c])) % kPrime;
    }
    ++rank;
  }
  return rank;
}

template <typename T>
using Rows = std::vector<std::vector<T>>;

// Each point p with multiplicity b contributes the b(b+1)/2 conditions
// d^{i+j} f / dx^i dy^j (p) = 0, i + j < b, on the monomial coefficients of f. Row entries
// are scaled by x_den^a y_den^a to stay integral. `lift` embeds integers in the ring and
// `mul` multiplies there.
template <typename T, typename Lift, typename Mul>
Rows<T> condition_rows(int degree, std::array<int, 6> const& mult, PointConfig const& config,
                       std::vector<std::pair<int, int>> const& monomials, Lift lift, Mul mul) {
  auto powers = [&](std::int64_t base) {
    std::vector<T> out(degree + 1, lift(1));
    for (int k = 1; k <= degree; ++k) out[k] = mul(out[k - 1], lift(base));
    return out;
  };
  auto falling = [&](int n, int k) {
    T out = lift(1);
    for (int t = 0; t < k; ++t) out = mul(out, lift(n - t));
    return out;
  };
  Rows<T> rows;
  for (int p = 0; p < 6; ++p) {
    if (mult[p] == 0) continue;
    auto const& pt = config.points[p];
    auto const xn = powers(pt.x_num), xd = powers(pt.x_den);
    auto const yn = powers(pt.y_num), yd = powers(pt.y_den);
    for (int order = 0; order < mult[p]; ++order) {
      for (int i = order; i >= 0; --i) {
        int const j = order - i;
        std::vector<T> row(monomials.size(), lift(0));
        for (std::size_t col = 0; col < monomials.size(); ++col) {
          auto const [u, v] = monomials[col];
          if (u < i || v < j) continue;
          T x = mul(falling(u, i), falling(v, j));
          x = mul(x, mul(xn[u - i], xd[degree - u + i]));
          row[col] = mul(x, mul(yn[v - j], yd[degree - v + j]));
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

struct Interpolation {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  Eigen::Index rank = 0;
  Integer count() const { return Integer(cols - rank); }
  bool full_rank() const { return rank == std::min(rows, cols); }
};

// A full rank modulo p certifies full rational rank; otherwise the matrix is eliminated
// exactly over Z.
Interpolation interpolate(int degree, std::array<int, 6> const& mult, PointConfig const& config) {
  std::vector<std::pair<int, int>> monomials;
  for (int total = 0; total <= degree; ++total)
    for (int u = total; u >= 0; --u) monomials.emplace_back(u, total - u);

  Interpolation out;
  for (int b : mult) out.rows += b * (b + 1) / 2;
  out.cols = static_cast<Eigen::Index>(monomials.size());
  if (out.rows == 0) return out;

  out.rank = modular_rank(condition_rows<std::uint64_t>(
      degree, mult, config, monomials, [](std::int64_t v) { return to_mod(v); }, mul_mod));
  if (out.full_rank()) return out;

  auto const exact = condition_rows<Big>(
      degree, mult, config, monomials, [](std::int64_t v) { return Big(v); },
      [](Big const& x, Big const& y) { return Big(x * y); });
  BigMatrix m(out.rows, out.cols);
  for (Eigen::Index r = 0; r < out.rows; ++r)
    for (Eigen::Index c = 0; c < out.cols; ++c) m(r, c) = exact[r][c];
  out.rank = fraction_free_rank(m);
  return out;
}

struct ClampedClass {
  int degree = -1;  // negative: no sections
  std::array<int, 6> mult{};
};

ClampedClass clamp(DivisorClass const& d) {
  ClampedClass out;
  if (d.a() < 0) return out;
  check_internal(d.a() <= 1000, "oracle degree too large");
  out.degree = static_cast<int>(to_int64(d.a()));
  for (int i = 1; i <= 6; ++i) {
    // A negative b_i means e_i is a fixed component; removing it keeps h0.
    Integer const b = d.b(i) < 0 ? Integer(0) : d.b(i);
    check_internal(b <= 1000, "oracle multiplicity too large");
    out.mult[i - 1] = static_cast<int>(to_int64(b));
  }
  return out;
}

}  // namespace

bool general_position(std::array<RationalPoint, 6> const& points) {
  std::array<Homogeneous, 6> h;
  for (int i = 0; i < 6; ++i) h[i] = homogenize(points[i]);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        Eigen::Matrix<Big, 3, 3> t;
        for (int r = 0; r < 3; ++r) {
          auto const& p = h[r == 0 ? i : r == 1 ? j : k];
          t(r, 0) = p.x;
          t(r, 1) = p.y;
          t(r, 2) = p.z;
        }
        if (fraction_free_rank(t) < 3) return false;
      }
  BigMatrix conic(6, 6);
  for (int r = 0; r < 6; ++r) {
    Big const x = h[r].x, y = h[r].y, z = h[r].z;
    conic(r, 0) = x * x;
    conic(r, 1) = x * y;
    conic(r, 2) = y * y;
    conic(r, 3) = x * z;
    conic(r, 4) = y * z;
    conic(r, 5) = z * z;
  }
  return fraction_free_rank(conic) == 6;
}

PointConfig sample_points(std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_int_distribution<std::int64_t> numerator(-kNumeratorBound, kNumeratorBound);
  std::uniform_int_distribution<std::int64_t> denominator(1, kDenominatorBound);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    PointConfig config;
    config.seed = seed;
    for (auto& p : config.points) {
      p.x_num = numerator(rng);
      p.x_den = denominator(rng);
      p.y_num = numerator(rng);
      p.y_den = denominator(rng);
    }
    if (general_position(config.points)) return config;
  }
  throw PreconditionError(Errc::DegeneratePoints,
                          "no general configuration for seed " + std::to_string(seed));
}

Integer interpolation_count(DivisorClass const& d, PointConfig const& config) {
  auto const c = clamp(d);
  if (c.degree < 0) return 0;
  return interpolate(c.degree, c.mult, config).count();
}

Integer h0_interpolation(DivisorClass const& d, std::uint64_t seed) {
  auto const c = clamp(d);
  if (c.degree < 0) return 0;
  Integer best = -1;
  for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
    auto const config = sample_points(attempt == 0 ? seed : splitmix64(seed + attempt));
    auto const result = interpolate(c.degree, c.mult, config);
    if (best < 0 || result.count() < best) best = result.count();
    // Full rank is the generic maximum; further configurations cannot lower the count.
    if (result.full_rank()) break;
  }
  return best;
}

}  // namespace cubic::oracle
