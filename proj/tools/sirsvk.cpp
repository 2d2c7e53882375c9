#include <iostream>
#include <string>
#include <vector>

#include "sirsvk/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sirsvk::run_cli(args, std::cout, std::cerr);
}
