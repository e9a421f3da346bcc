#include <iostream>

#include "grover/cli.hpp"

int main(int argc, char** argv) { return grover::cli::run(argc, argv, std::cout, std::cerr); }
