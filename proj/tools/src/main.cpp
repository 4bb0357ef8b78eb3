#include <iostream>
#include <string>
#include <vector>

#include "gradalg_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gradalg::cli::execute(args, std::cout, std::cerr);
}
