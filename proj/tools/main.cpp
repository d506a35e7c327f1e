#include "blvoa/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return blvoa::run_cli(argc, argv, std::cout, std::cerr); }
