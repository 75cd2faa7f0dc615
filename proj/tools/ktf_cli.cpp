#include <iostream>

#include "ktf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ktf::cli::run(args, std::cout, std::cerr);
}
