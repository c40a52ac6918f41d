#include <iostream>
#include <string>
#include <vector>

#include "triblock/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return triblock::run_cli(args, std::cout, std::cerr);
}
