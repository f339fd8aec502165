#include <iostream>

#include "sc_cli/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return sc::cli::run(args, std::cout, std::cerr);
}
