#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augtopo::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace augtopo::cli
