#include <iostream>

#include "frobgen/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return frobgen::cli::run(args, std::cout, std::cerr);
}
