#include <iostream>
#include <string>
#include <vector>

#include "contracts/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return contracts::run(args, std::cout, std::cerr);
}
