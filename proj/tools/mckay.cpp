#include <iostream>
#include <string>
#include <vector>

#include "mckay/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mckay::cli::run(args, std::cout, std::cerr);
}
