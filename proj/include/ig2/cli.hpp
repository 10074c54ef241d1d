// cli.hpp -- command-line surface; exit 0 all-pass, 1 check failure, 2 usage
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ig2 {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ig2
