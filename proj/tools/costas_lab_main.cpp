#include <iostream>

#include "costas/cli.hpp"

int main(int argc, char** argv) { return costas::cli::run_cli(argc, argv, std::cout, std::cerr); }
