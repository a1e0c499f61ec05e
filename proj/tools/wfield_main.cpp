#include <iostream>
#include <string>
#include <vector>

#include "wfield/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wfield::cli::run_cli(args, std::cout, std::cerr);
}
