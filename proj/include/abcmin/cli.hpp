#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abcmin::cli {

// Entry point behind the `abcmin` binary, separated so tests can drive it.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
// error (unreadable/invalid files or infeasible arguments).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abcmin::cli
