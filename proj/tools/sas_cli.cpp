#include <iostream>
#include <string>
#include <vector>

#include "sas/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sas::cli_main(args, std::cout, std::cerr);
}
