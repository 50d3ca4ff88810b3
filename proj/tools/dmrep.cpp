#include <iostream>

#include "dmrep/cli.hpp"

int main(int argc, char** argv) { return dmrep::cli::run_cli(argc, argv, std::cout, std::cerr); }
