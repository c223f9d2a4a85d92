#include <iostream>

#include "lozimax/cli.hpp"

int main(int argc, char** argv) { return lozimax::cli::run(argc, argv, std::cout, std::cerr); }
