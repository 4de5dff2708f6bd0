#pragma once

#include <string>
#include <vector>

namespace hk::cli {

// Runs the command line. With capture pointers the streams land in strings
// (used by the tests); otherwise they go to stdout/stderr. Exit codes:
// 0 success or pass verdict, 1 fail verdict or sweep disagreement,
// 2 input or usage error.
int run(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr);

int run(int argc, char** argv);

}  // namespace hk::cli
