#pragma once

#include <string>
#include <vector>

namespace zp::cli {

// Full dispatcher for the `zp` tool.  Exit codes: 0 success, 2 domain or
// usage error, 3 statistical precondition failure, 4 I/O failure.
int run(int argc, const char* const* argv);

// Test-friendly wrapper: args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace zp::cli
