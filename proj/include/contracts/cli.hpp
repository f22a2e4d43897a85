// Command-line surface. run() is the whole program (the binary's main just
// forwards), which keeps every subcommand testable in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace contracts {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace contracts
