#include <iostream>

#include "crnx/cli.hpp"

int main(int argc, char** argv) { return crnx::cli_main(argc, argv, std::cout, std::cerr); }
