#include <iostream>

#include "splitoct/cli.hpp"

int main(int argc, char** argv) { return splitoct::run_cli(argc, argv, std::cout, std::cerr); }
