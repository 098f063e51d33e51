#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return geodesics::cli::run(argc, argv, std::cout, std::cerr); }
