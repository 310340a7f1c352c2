#include <iostream>
#include <string>
#include <vector>

#include "gibbs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gibbs::cli::run(args, std::cout, std::cerr);
}
