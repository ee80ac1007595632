#include <iostream>
#include <string>
#include <vector>

#include "lambda_brooks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lambda_brooks::cli::run(args, std::cin, std::cout, std::cerr);
}
