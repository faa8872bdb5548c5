#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace combmat {

/// Command-line front end. `args[0]` is the program name. Returns the process
/// exit status: 0 success, 1 failure (a failing suite, singular input), 2 usage
/// or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combmat
