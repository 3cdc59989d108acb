#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace cubic {

// Expression templates are off: Eigen and Boost.Multiprecision disagree about
// expression types otherwise.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
inline std::string to_string(Scalar const& value) {
  if constexpr (std::is_integral_v<Scalar>) {
    return std::to_string(value);
  } else {
    return value.str();
  }
}

template <typename Scalar>
inline bool fits_int64(Scalar const& value) {
  if constexpr (std::is_integral_v<Scalar>) {
    return true;
  } else {
    return value >= std::numeric_limits<std::int64_t>::min() &&
           value <= std::numeric_limits<std::int64_t>::max();
  }
}

template <typename Scalar>
inline std::int64_t to_int64(Scalar const& value) {
  if constexpr (std::is_integral_v<Scalar>) {
    return static_cast<std::int64_t>(value);
  } else {
    return value.template convert_to<std::int64_t>();
  }
}

}  // namespace cubic
