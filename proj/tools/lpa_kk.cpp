#include <iostream>

#include "lpakk/cli.hpp"

int main(int argc, char** argv) { return lpakk::cli::run(argc, argv, std::cout, std::cerr); }
