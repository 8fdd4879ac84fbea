#include <iostream>

#include "awarekit/cli.hpp"

int main(int argc, char** argv) { return awarekit::run_cli(argc, argv, std::cout, std::cerr); }
