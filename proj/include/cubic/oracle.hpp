#pragma once

// Brute-force h0 on the blow-up model: the dimension of plane curves of degree a with
// multiplicity >= b_i at six points in general position, computed as the corank of an
// exact interpolation matrix. Used only to validate the cohomology engine.

#include "cubic/lattice.hpp"

#include <array>
#include <cstdint>

namespace cubic::oracle {

/// The rational point (x_num / x_den, y_num / y_den).
struct RationalPoint {
  std::int64_t x_num = 0, x_den = 1;
  std::int64_t y_num = 0, y_den = 1;
};

struct PointConfig {
  std::array<RationalPoint, 6> points;
  std::uint64_t seed = 0;
};

/// Largest numerator magnitude and denominator of sampled coordinates.
inline constexpr std::int64_t kNumeratorBound = 24;
inline constexpr std::int64_t kDenominatorBound = 4;
inline constexpr int kMaxSamplingAttempts = 10;

/// No three points collinear and the six not on a conic, by exact determinants.
bool general_position(std::array<RationalPoint, 6> const& points);

/// Six general points drawn deterministically from `seed`; resamples degenerate draws and
/// throws PreconditionError(DegeneratePoints) after kMaxSamplingAttempts failures.
PointConfig sample_points(std::uint64_t seed);

/// dim { degree-a plane curves with multiplicity >= b_i at p_i } for one configuration,
/// after clamping negative b_i to zero; 0 when a < 0.
Integer interpolation_count(DivisorClass const& d, PointConfig const& config);

/// Generic h0(D): the minimum of interpolation_count over configurations from `seed` and
/// two further derived seeds. Stops early once the matrix has full rank.
Integer h0_interpolation(DivisorClass const& d, std::uint64_t seed);

}  // namespace cubic::oracle
