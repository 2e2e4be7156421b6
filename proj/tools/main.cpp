#include <iostream>

#include "sylvsum/cli.hpp"

int main(int argc, char** argv) {
  const auto result = sylvsum::cli::run(argc, argv);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
