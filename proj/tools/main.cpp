#include <iostream>
#include <string>
#include <vector>

#include "locallmo/harness.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return locallmo::cli(args, std::cout, std::cerr);
}
