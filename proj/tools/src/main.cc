#include <iostream>
#include <string>
#include <vector>

#include "l1landscape_cli/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return l1landscape::cli::run(std::move(args), std::cout, std::cerr);
}
