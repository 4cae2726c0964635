#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nkind {

// Dispatches one command line (without the program name). Exit status:
// 0 success, 1 verification failure, 2 parse/usage error, 3 cap exceeded,
// 4 internal invariant failure (always a bug).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nkind
