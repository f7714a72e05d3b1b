#include <iostream>

#include "turan/cli.hpp"

int main(int argc, char** argv) { return turan::run_cli(argc, argv, std::cout, std::cerr); }
