#include <iostream>
#include <string>
#include <vector>

#include "szf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return szf::run_cli(args, std::cout, std::cerr);
}
