#include <iostream>
#include <string>
#include <vector>

#include "descalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return descalg::run_cli(args, std::cout, std::cerr);
}
