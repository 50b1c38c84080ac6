#include <iostream>
#include <string>
#include <vector>

#include "faclang/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return faclang::run_cli(args, std::cout, std::cerr);
}
