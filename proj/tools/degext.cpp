#include <iostream>

#include "degext/cli.hpp"

int main(int argc, char** argv) { return degext::run_command(argc, argv, std::cout, std::cerr); }
