// cli.hpp: the braidseed command line, factored for in-process testing.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidseed {

// Exit codes: 0 success, 2 invalid input, 3 empty variety, 4 internal
// invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidseed
