#include <iostream>
#include <string>
#include <vector>

#include "jsup/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jsup::cli::run(args, std::cout, std::cerr);
}
