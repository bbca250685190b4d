#include <iostream>

#include "sges/cli.hpp"

int main(int argc, char** argv) {
  return sges::cli::run(argc, argv, std::cout, std::cerr);
}
