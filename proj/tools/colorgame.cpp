#include "colorgame/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return colorgame::run_cli(argc, argv, std::cout, std::cerr); }
