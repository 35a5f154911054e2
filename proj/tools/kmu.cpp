#include <iostream>
#include <string>
#include <vector>

#include "kmu/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kmu::cli::run(args, std::cout, std::cerr);
}
