#include <iostream>
#include <string>
#include <vector>

#include "fqwell/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fqwell::cli::run(args, std::cin, std::cout, std::cerr);
}
