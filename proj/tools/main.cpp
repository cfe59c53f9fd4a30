#include <iostream>
#include <string>
#include <vector>

#include "ehpath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ehpath::run_cli(args, std::cout, std::cerr);
}
