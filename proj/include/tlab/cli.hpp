#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tlab {

// Runs one transversal-lab invocation; args exclude the program name.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tlab
