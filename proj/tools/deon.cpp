#include <iostream>
#include <string>
#include <vector>

#include "deon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return deon::run_cli(args, std::cout, std::cerr);
}
