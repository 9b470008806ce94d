#include <iostream>

#include "cspace/cli.hpp"

int main(int argc, char** argv) { return cspace::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
