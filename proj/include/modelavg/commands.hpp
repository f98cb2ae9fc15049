#pragma once

#include <cstdint>
#include <iosfwd>

#include "modelavg/config.hpp"

namespace modelavg {

/// Process exit codes shared by all subcommands.
enum ExitCode : int { kExitOk = 0, kExitInvalidInput = 1, kExitValidationFailed = 2 };

/// Runtime knobs resolved from flags, file and environment.
struct RunOptions {
  std::uint64_t seed = 0;
  unsigned workers = 0;
};

// Each subcommand writes its data (CSV with a header row) to `out` and
// human-readable notes to `diag`, and returns an ExitCode.

int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_curve(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_contour(const RunConfig& config, std::ostream& out, std::ostream& diag);
int cmd_validate(const RunConfig& config, const RunOptions& options, std::ostream& out,
                 std::ostream& diag);
int cmd_federate(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace modelavg
