#include <iostream>
#include <string>
#include <vector>

#include "lombardi/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lombardi::cli_run(args, std::cin, std::cout, std::cerr);
}
