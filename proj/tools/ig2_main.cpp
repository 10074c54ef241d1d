#include <iostream>
#include <vector>

#include "ig2/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ig2::run_cli(args, std::cout, std::cerr);
}
