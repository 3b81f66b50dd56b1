#include <iostream>

#include "rmtopt/cli.hpp"

int main(int argc, char** argv) { return rmtopt::run_cli(argc, argv, std::cout, std::cerr); }
