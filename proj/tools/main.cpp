#include <iostream>

#include "algforge/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return algforge::run_cli(args, std::cout, std::cerr);
}
