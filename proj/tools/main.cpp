#include <iostream>
#include <string>
#include <vector>

#include "ocycles/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ocycles::cli::run(args, std::cout, std::cerr);
}
