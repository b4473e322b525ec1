#include <iostream>
#include <string>
#include <vector>

#include "chromlag/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chromlag::run_cli(args, std::cout, std::cerr);
}
