#include <iostream>
#include <string>
#include <vector>

#include "dvfactor/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dvfactor::cli::run(args, std::cout, std::cerr);
}
