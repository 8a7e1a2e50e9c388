// One PASS/FAIL line per acceptance criterion. Optional arguments select criteria by number.
#include <cstdlib>
#include <iostream>

#include "shocklayer/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= 12; ++i) ids.push_back(i);
  int failed = 0;
  for (int id : ids) {
    const sl::CriterionResult r = sl::run_criterion(id);
    std::cout << r.line() << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << ids.size() - failed << "/" << ids.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
