#include <iostream>

#include "motdt/cli.hpp"

int main(int argc, char** argv) { return motdt::run_cli(argc, argv, std::cout, std::cerr); }
