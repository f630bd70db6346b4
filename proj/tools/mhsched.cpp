#include <iostream>
#include <string>
#include <vector>

#include "mh/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mh::cli::run(args, std::cout, std::cerr);
}
