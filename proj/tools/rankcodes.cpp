#include <iostream>

#include "rankmetric/cli.hpp"

int main(int argc, char** argv) { return rankmetric::cli::run_cli(argc, argv, std::cout, std::cerr); }
