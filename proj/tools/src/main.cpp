#include <iostream>

#include "prachjam/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return prachjam::cli::run(args, std::cout, std::cerr);
}
