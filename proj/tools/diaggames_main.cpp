#include <iostream>
#include <string>
#include <vector>

#include "diaggames/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return diaggames::cli::run(args, std::cin, std::cout, std::cerr);
}
