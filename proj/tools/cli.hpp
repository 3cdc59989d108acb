#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubic::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags or a malformed class string
  kPrecondition = 2,  // a valid string naming an invalid input, e.g. NotSmoothMember
  kInternal = 3,      // an engine assertion fired
};

/// Runs one command line (without the program name). `in` feeds --stdin batch mode.
int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cubic::cli
