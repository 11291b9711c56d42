#include <iostream>

#include "splitqm/cli.hpp"

int main(int argc, char** argv) { return splitqm::run_cli(argc, argv, std::cout, std::cerr); }
