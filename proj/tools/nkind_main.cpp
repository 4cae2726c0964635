#include <iostream>
#include <string>
#include <vector>

#include "nkind/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nkind::run_cli(args, std::cout, std::cerr);
}
