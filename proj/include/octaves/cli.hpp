#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octaves::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 iff the command's checks pass. Usage and domain errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Convenience for tests: captures stdout and the exit code.
struct Captured {
    int exit_code = 0;
    std::string out;
    std::string err;
};
Captured run_captured(const std::vector<std::string>& args);

} // namespace octaves::cli
