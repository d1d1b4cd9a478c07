#include <iostream>

#include "floerkit/cli.hpp"

int main(int argc, char** argv) { return floerkit::cli_main(argc, argv, std::cout, std::cerr); }
