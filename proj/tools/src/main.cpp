#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* dir = std::getenv("KDSIM_OUTPUT_DIR");
    return kdsim::cli::run(args, std::cout, std::cerr, dir ? dir : ".");
}
