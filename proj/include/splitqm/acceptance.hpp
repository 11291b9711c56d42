#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace splitqm {

struct AcceptanceOptions {
  std::uint64_t seed = 20161020;
  /// Builds the prime-power and staircase witnesses with the literal
  /// translating elements, so the growth check is expected to fail.
  bool corrupt_convention = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs the thirteen acceptance checks in order. `on_result` sees each
/// result as soon as it is available.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  homogenization  (0.41 s)  detail"; the time is left out
/// when `with_time` is false.
std::string format_result(const CriterionResult& r, bool with_time = true);

}  // namespace splitqm
