#include <iostream>

#include "pat/cli.hpp"

int main(int argc, char** argv) {
  return pat::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
