#include <iostream>

#include "clawcycle/cli.hpp"

int main(int argc, char** argv) { return clawcycle::run_cli(argc, argv, std::cout, std::cerr); }
