#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faclang {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,         // parse or usage error
    kExitSemantic = 2,      // empty / non-factorial / non-minimal input
    kExitVerification = 3,  // --verify failure, failed audit or fixture mismatch
};

// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faclang
