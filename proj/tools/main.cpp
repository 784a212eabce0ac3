#include <iostream>
#include <string>
#include <vector>

#include "flagsym/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flagsym::dispatch(args, std::cout, std::cerr);
}
