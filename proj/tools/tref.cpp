#include <iostream>

#include "tref/cli.hpp"

int main(int argc, char** argv) { return tref::run(argc, argv, std::cout, std::cerr); }
