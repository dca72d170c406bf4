#include <cstdlib>
#include <iostream>

#include "supergrading/selftest.hpp"

int main(int argc, char** argv) {
  supergrading::SelftestOptions options;
  if (argc > 1) options.max_size = std::atoi(argv[1]);
  int failed = 0;
  for (const auto& r : supergrading::run_acceptance(options)) {
    std::cout << supergrading::format_result(r) << std::endl;
    failed += !r.passed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << failed << " failing criteria" << std::endl;
  return failed ? 1 : 0;
}
