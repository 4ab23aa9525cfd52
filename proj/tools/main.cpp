#include <iostream>
#include <string>
#include <vector>

#include "lopq_cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lopq::cli::main_entry(args, std::cout, std::cerr);
}
