#include <iostream>
#include <string>
#include <vector>

#include "momentkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return momentkit::cli::run(args, std::cout, std::cerr);
}
