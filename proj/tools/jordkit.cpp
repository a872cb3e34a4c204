#include <iostream>

#include "jordkit/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jordkit::cli::run_cli(args, std::cout, std::cerr);
}
