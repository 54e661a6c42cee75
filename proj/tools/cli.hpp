#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steinersurf {

// Exit codes: 0 yes / success, 1 a negative answer (not colorable, not a
// manifold, ...), 2 usage or input error, 3 a search limit was reached.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace steinersurf
