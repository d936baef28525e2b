#include <iostream>

#include "su3/cli.hpp"

int main(int argc, char** argv) { return su3::cli_main(argc, argv, std::cout, std::cerr); }
