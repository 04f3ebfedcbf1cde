#pragma once

#include <ostream>

#include "casimir/cli/config.hpp"
#include "casimir/cli/table.hpp"

namespace casimir::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kMaterialError = 3,
  kNumericalError = 4,
  kDomainError = 5,
};

/// Computes the table for `cfg`. Numerical failures are rethrown with the
/// failing grid point prepended to the message.
Table build_table(const RunConfig& cfg);

/// Builds and emits the table; diagnostics go to `err` as
/// "error: <kind>: <message>". Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
