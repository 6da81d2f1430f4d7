#include <iostream>

#include "eccforge/cli.hpp"

int main(int argc, char** argv)
{
    return eccforge::cli::run(argc, argv, std::cout, std::cerr);
}
