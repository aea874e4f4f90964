#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name): marks, dmatrix, blocks,
/// ext, tor, verify or growth. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success or a passing verification, 1 on a failed
/// verification or a computation error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burnside::cli
