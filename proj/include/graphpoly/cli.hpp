#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphpoly {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitInternal = 4,  // an identity check or internal consistency check failed
};

// args excludes the program name. Results go to `out`; diagnostics, worker
// count and wall time go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphpoly
