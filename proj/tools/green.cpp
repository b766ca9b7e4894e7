#include <iostream>

#include "green/cli.hpp"

int main(int argc, char** argv) { return green::cli::main_entry(argc, argv, std::cout, std::cerr); }
