#include <iostream>
#include <vector>

#include "chainex/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chainex::cli::run(args, std::cout, std::cerr);
}
