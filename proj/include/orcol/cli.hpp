#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orcol::cli {

enum ExitStatus : int {
    ok = 0,
    not_colorable = 1,
    usage_error = 2,
    cap_exceeded = 3,
    cross_check_failed = 4,
};

/// Runs one CLI invocation. `args` excludes the program name; `in` is read
/// when the input path is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orcol::cli
