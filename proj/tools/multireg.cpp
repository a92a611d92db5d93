#include <iostream>
#include <string>
#include <vector>

#include "multireg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return multireg::cli::run(args, std::cout, std::cerr);
}
