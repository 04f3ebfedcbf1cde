#include <iostream>

#include "casimir/cli/run.hpp"

int main(int argc, char** argv) { return casimir::cli::main_entry(argc, argv, std::cout, std::cerr); }
