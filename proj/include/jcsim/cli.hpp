#pragma once

#include <string>
#include <vector>

namespace jcsim::cli {

// Command-line front end. Returns the process exit status:
//   0 success, 2 flag/usage errors, 3 numeric failure or failed validation.
int run(int argc, const char* const* argv);

// Same, for tests; args exclude the program name.
int run(const std::vector<std::string>& args);

}  // namespace jcsim::cli
