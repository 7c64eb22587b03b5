#include <iostream>
#include <string>
#include <vector>

#include "h2plan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return h2plan::cli::run(args, std::cout, std::cerr);
}
