#include <iostream>
#include <vector>

#include "logres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return logres::cli::run(std::move(args), std::cout, std::cerr);
}
