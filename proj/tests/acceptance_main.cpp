// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "cubic/acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  using namespace cubic::acceptance;
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));

  std::cout << "tolerance: exact integer equality for every criterion\n";
  bool failed = false;
  for (int id : ids.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10} : ids) {
    auto const start = std::chrono::steady_clock::now();
    auto const r = run_criterion(id);
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << format_criteria({r});
    std::cout << "      (" << secs << " s)\n";
    std::cout.flush();
    failed |= r.failed();
  }
  std::cout << (failed ? "ACCEPTANCE FAILED\n" : "ACCEPTANCE PASSED\n");
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
