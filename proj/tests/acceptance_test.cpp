// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include "ucg/selftest.hpp"

#include <iostream>

int main()
{
  ucg::selftest::Options opt;
  const auto results = ucg::selftest::run_all(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << ucg::selftest::format_result(r) << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
