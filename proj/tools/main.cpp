#include <iostream>

#include "parbias/cli.hpp"

int main(int argc, char** argv) {
    return parbias::cli_run(argc, argv, std::cout, std::cerr);
}
