#include <iostream>
#include <string>
#include <vector>

#include "pnd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pnd::cli_main(args, std::cout, std::cerr);
}
