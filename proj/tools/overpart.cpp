#include <iostream>

#include "overpart/cli.hpp"

int main(int argc, char** argv) { return overpart::cli::run({argv, argv + argc}, std::cout, std::cerr); }
