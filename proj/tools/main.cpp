#include <iostream>

#include "altperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return altperm::run(args, std::cout, std::cerr);
}
