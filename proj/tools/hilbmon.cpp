#include <iostream>
#include <string>
#include <vector>

#include "hilbmon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hilbmon::cli::run(std::move(args), std::cout, std::cerr);
}
