#include <iostream>

#include "rbt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rbt::cli::run(args, std::cout, std::cerr);
}
