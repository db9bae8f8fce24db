#include <iostream>

#include "mmohocc/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return mmohocc::cli::run(argc, argv, std::cout, std::cerr);
}
