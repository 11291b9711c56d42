#include <cstring>
#include <iostream>

#include "splitqm/acceptance.hpp"

int main(int argc, char** argv) {
  splitqm::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--corrupt-convention") == 0) options.corrupt_convention = true;
  }
  bool all = true;
  splitqm::run_acceptance(options, [&](const splitqm::CriterionResult& r) {
    std::cout << splitqm::format_result(r) << std::endl;
    all = all && r.passed;
  });
  return all ? 0 : 1;
}
