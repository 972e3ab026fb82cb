#include <iostream>
#include <string>
#include <vector>

#include "chaoslab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chaoslab::run(args, std::cout, std::cerr);
}
