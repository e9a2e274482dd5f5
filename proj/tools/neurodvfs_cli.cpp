#include "neurodvfs/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return neurodvfs::cli::main_entry(argc, argv, std::cout, std::cerr);
}
