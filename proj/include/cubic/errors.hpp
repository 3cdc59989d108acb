#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubic {

enum class Errc {
  NotEffective,
  NotSmoothMember,
  NotALine,
  DegreeTooSmall,
  NonPositiveDegree,
  GenusOutOfHodgeRange,
  InvalidK,
  DprimeNotNef,
  InvalidRange,
  DegeneratePoints,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotEffective: return "NotEffective";
    case Errc::NotSmoothMember: return "NotSmoothMember";
    case Errc::NotALine: return "NotALine";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NonPositiveDegree: return "NonPositiveDegree";
    case Errc::GenusOutOfHodgeRange: return "GenusOutOfHodgeRange";
    case Errc::InvalidK: return "InvalidK";
    case Errc::DprimeNotNef: return "DprimeNotNef";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::DegeneratePoints: return "DegeneratePoints";
  }
  return "Unknown";
}

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Errc code, std::string const& what)
      : std::invalid_argument(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// An identity that must hold by construction was violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input; `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string input, std::size_t position, std::string const& message)
      : std::invalid_argument(message), input_(std::move(input)), position_(position) {}

  std::string const& input() const noexcept { return input_; }
  std::size_t position() const noexcept { return position_; }

  /// Two-line rendering: the input, then a caret under the offending character.
  std::string annotated() const {
    return "  " + input_ + "\n  " + std::string(position_, ' ') + "^ " + what();
  }

 private:
  std::string input_;
  std::size_t position_;
};

inline void check_internal(bool condition, char const* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace cubic
