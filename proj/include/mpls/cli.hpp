#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpls::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kVerificationFailure = 2 };

// Runs one command line (args exclude the program name). Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpls::cli
