#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "acceptance.hpp"

// Runs every acceptance criterion; optional arguments restrict to given ids.
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  std::size_t failed = 0;
  const auto results = ncnull::selftest::run_all(only, [&](const ncnull::selftest::CriterionResult& r) {
    std::printf("%s\n", ncnull::selftest::format_line(r).c_str());
    std::fflush(stdout);
    failed += !r.passed;
  });
  std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}
