#include <iostream>

#include "xdisc_cli/cli.hpp"

int main(int argc, char** argv) { return xdisc::cli::run_cli(argc, argv, std::cout, std::cerr); }
