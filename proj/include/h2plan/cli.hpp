#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "h2plan/error.hpp"

namespace h2plan::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kDomain = 2,
    kConvergence = 3,
    kInfeasible = 4,
};

[[nodiscard]] int exit_code(ErrorKind kind) noexcept;

/// "15.7 days", "42.8 min", ...
[[nodiscard]] std::string humanize_duration(double seconds);

/// Runs one command line (arguments without the program name). Results go to
/// `out`, every diagnostic to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace h2plan::cli
