#include <iostream>
#include <string>
#include <vector>

#include "qprop/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qprop::cli::run_cli(args, std::cout, std::cerr, qprop::cli::process_environment());
}
