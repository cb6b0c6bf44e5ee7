#include "spinforge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = spinforge::cli::run(args);
  std::cout << outcome.payload;
  std::cerr << outcome.diagnostic;
  return outcome.exitCode;
}
