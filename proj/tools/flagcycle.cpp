#include <iostream>

#include "flagcycle/cli.hpp"

int main(int argc, char** argv) { return flagcycle::run_cli(argc, argv, std::cout, std::cerr); }
