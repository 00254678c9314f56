#include <iostream>

#include "wavegc/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wavegc::cli::run(args, std::cout, std::cerr);
}
