#include <iostream>

#include "stable_info/cli.hpp"

int main(int argc, char** argv) { return stable_info::run_cli(argc, argv, std::cout, std::cerr); }
