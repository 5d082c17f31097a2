#include <iostream>

#include "gasket/cli.hpp"

int main(int argc, char** argv) { return gasket::cli::run(argc, argv, std::cout, std::cerr); }
