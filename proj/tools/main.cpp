#include <iostream>

#include "smallcancel/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return smallcancel::run(args, std::cout, std::cerr);
}
