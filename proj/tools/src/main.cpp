#include <iostream>

#include "excc_cli/experiments.hpp"

int main(int argc, char** argv) { return excc::cli::run_command(argc, argv, std::cout, std::cerr); }
