#include <iostream>
#include <string>
#include <vector>

#include "bqlong/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bqlong::cli::run(std::move(args), std::cout, std::cerr);
}
