#include <iostream>

#include "dbent/cli.hpp"

int main(int argc, char** argv)
{
    return dbent::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout);
}
