#include <iostream>
#include <string>
#include <vector>

#include "zrc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zrc::cli::run(args, std::cout, std::cerr);
}
