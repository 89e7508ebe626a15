#pragma once

#include <iosfwd>

namespace sympair::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kConstraintViolation = 2,
  kVerificationMismatch = 3,
  kBudgetExceeded = 4,
};

/// Runs one command line. Reports go to out (or to --out); error objects go to out.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace sympair::cli
