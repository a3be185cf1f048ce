#include <iostream>

#include "gqw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gqw::run_cli(args, std::cout, std::cerr);
}
