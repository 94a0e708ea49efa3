#include <iostream>

#include "shieldbic/cli.hpp"

int main(int argc, char** argv) { return shieldbic::runCli(argc, argv, std::cout, std::cerr); }
