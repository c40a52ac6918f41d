#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line surface.  `run_cli` is the whole program minus argv
// marshalling so tests can drive it in-process.
//
// Exit codes: 0 saturated blocker (or command succeeded), 1 non-blocker,
// 2 blocker but not saturated, 3 input/usage error, 4 internal self-check
// failure.

namespace triblock {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triblock
