#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const char* budget = std::getenv("AWAREKIT_BUDGET");
  return awarekit::cli::run(args, std::cout, std::cerr, budget ? budget : "");
}
