#include <iostream>

#include "jg/cli.hpp"

int main(int argc, char** argv) { return jg::run_cli(argc, argv, std::cout, std::cerr); }
