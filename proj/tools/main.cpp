#include <iostream>
#include <string>
#include <vector>

#include "qcgeom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcgeom::cli_dispatch(args, std::cout, std::cerr);
}
