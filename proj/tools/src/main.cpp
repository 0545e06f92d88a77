#include <iostream>

#include "courant_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = courant::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
