#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqsing {

// Entry point of the command line tool; args excludes the program name.
// Exit codes: 0 ok / PASS, 1 usage or input error, 2 verification FAIL,
// 3 all seeds degenerate or undecided.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqsing
