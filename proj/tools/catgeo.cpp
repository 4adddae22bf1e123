#include <iostream>

#include "catgeo/cli.hpp"

int main(int argc, char** argv) { return catgeo::run_cli(argc, argv, std::cout, std::cerr); }
