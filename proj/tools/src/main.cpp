#include <iostream>

#include "pqaka_cli/cli.hpp"

int main(int argc, char** argv) { return pqaka::cli::run(argc, argv, std::cout, std::cerr); }
