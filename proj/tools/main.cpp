#include <iostream>
#include <string>
#include <vector>

#include "polar_jacobi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return pj::run_cli(args, std::cout, std::cerr);
}
