#include <iostream>

#include "betti/cli.hpp"

int main(int argc, char** argv) { return betti::run_cli(argc, argv, std::cout, std::cerr); }
