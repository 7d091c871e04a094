#include <iostream>

#include "igk/cli.hpp"

int main(int argc, char** argv) { return igk::cli::run(argc, argv, std::cout, std::cerr); }
