#include <iostream>
#include <string>
#include <vector>

#include "genusgate/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return genusgate::run_cli(args, std::cout, std::cerr);
}
