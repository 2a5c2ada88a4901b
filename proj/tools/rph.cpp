#include <iostream>
#include <string>
#include <vector>

#include "rph/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rph::cli_dispatch(args, std::cout, std::cerr);
}
