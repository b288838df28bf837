#include <iostream>

#include "tropelim/cli.hpp"

int main(int argc, char** argv) { return tropelim::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
