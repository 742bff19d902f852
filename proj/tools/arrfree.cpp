#include <iostream>
#include <string>
#include <vector>

#include "arrfree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return arrfree::cli::run(args, std::cout, std::cerr);
}
