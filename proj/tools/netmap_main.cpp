#include <iostream>

#include "netmap/cli.hpp"

int main(int argc, char** argv) { return netmap::run_main(argc, argv, std::cout, std::cerr); }
