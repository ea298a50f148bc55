#include <iostream>

#include "dengue/cli.hpp"

int main(int argc, char** argv) { return dengue::run_cli(argc, argv, std::cout, std::cerr); }
