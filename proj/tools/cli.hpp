#pragma once

#include <iosfwd>

namespace pdpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInput = 3,
  kCap = 4,
  kNumeric = 5,
  kPartial = 6,  // catalog ran but some lines failed
};

/// Parses argv and runs one subcommand, writing JSON (or CSV/graph6) to out
/// and one-line diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdpoly::cli
