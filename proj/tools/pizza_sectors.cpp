#include "pizza/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pizza::run_cli(argc, argv, std::cout, std::cerr);
}
