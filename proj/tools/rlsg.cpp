#include <iostream>

#include "rlsg/cli.hpp"

int main(int argc, char** argv) { return rlsg::cli::main(argc, argv, std::cout, std::cerr); }
