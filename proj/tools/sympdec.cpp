#include <iostream>

#include <unistd.h>

#include "sympdec/cli.hpp"

int main(int argc, char** argv) {
  return sympdec::run_cli(argc, argv, std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0);
}
