#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffalg::cli {

/// Exit codes: 0 verification passed, 2 verification ran and failed, 1 usage or input error.
enum ExitCode : int { kPass = 0, kUsage = 1, kFail = 2 };

/// Runs one command line (without the program name). Writes a single JSON
/// document to `out` and human-readable progress to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliffalg::cli
