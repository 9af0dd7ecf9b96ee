#include "shy/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return shy::cli::main_entry(argc, argv, std::cout, std::cerr);
}
