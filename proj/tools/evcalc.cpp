#include <iostream>

#include "evcalc/cli.hpp"

int main(int argc, char** argv) {
  return evcalc::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
