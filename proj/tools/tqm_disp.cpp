#include <iostream>
#include <string>
#include <vector>

#include "tqm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tqm::cli::run(args, std::cout, std::cerr);
}
