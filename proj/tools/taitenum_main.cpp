#include <iostream>
#include <string>
#include <vector>

#include "taitenum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return taitenum::cli::run(args, std::cin, std::cout, std::cerr);
}
