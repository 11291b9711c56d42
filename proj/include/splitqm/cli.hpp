#pragma once

#include <ostream>

namespace splitqm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the splitqm command line. Reports go to `out`, errors to
/// `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace splitqm
