#include <iostream>
#include <vector>

#include "bettipair/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bettipair::run_cli(args, std::cout, std::cerr);
}
