#pragma once

#include <ostream>

namespace skl {

// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,      // bad flags, unknown preset, bad parameters
    kExitCap = 3,        // degree or group-size cap exceeded
    kExitParse = 4,      // unreadable presentation, group or number text
    kExitInternal = 5,   // a consistency check inside the library failed
};

// Runs one invocation; argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace skl
