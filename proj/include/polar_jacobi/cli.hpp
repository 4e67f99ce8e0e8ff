#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "polar_jacobi/poly.hpp"

namespace pj {

/// Exit codes of the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDegenerate = 2,
    kExitNoConvergence = 3,
    kExitVerifyFailed = 4,
};

/// Parses RE[+-IMi], e.g. "2", "-0.5+1i", "1e-3-2.5i". No spaces.
std::optional<Complex> parse_complex(const std::string& text);

/// Runs one command; args excludes the program name. Diagnostics go to
/// err as a single line starting with "error:".
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pj
