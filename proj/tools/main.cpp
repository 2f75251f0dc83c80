#include <iostream>
#include <string>
#include <vector>

#include "symorb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symorb::cli::run(args, std::cout, std::cerr);
}
