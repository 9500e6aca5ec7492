#include <iostream>

#include "bcpoly/cli.hpp"

int main(int argc, char** argv) { return bcpoly::cli::run(argc, argv, std::cout, std::cerr); }
