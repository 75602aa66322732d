#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace lombardi {

// Entry point shared by the binary and the tests. Exit codes: 0 success,
// 1 verification failure, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lombardi
