#pragma once

#include <string>
#include <vector>

namespace gfp::cli {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 success/verified, 1 verification failed, 2 usage or spec
// error, 3 budget exceeded.
CliResult run(const std::vector<std::string>& args);

}  // namespace gfp::cli
