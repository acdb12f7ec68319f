#include <iostream>

#include "riccati/cli.hpp"

int main(int argc, char** argv) { return riccati::cli_main(argc, argv, std::cout, std::cerr); }
