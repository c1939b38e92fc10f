#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncalg {

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncalg
