#include <iostream>
#include <string>
#include <vector>

#include "divalg/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return divalg::run(args, std::cout, std::cerr);
}
