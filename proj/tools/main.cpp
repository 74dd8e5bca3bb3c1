#include "hullcount/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hullcount::cli::run_cli(argc, argv, std::cout, std::cerr); }
