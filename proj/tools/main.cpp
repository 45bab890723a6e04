#include <iostream>

#include "allsat/cli.hpp"

int main(int argc, char** argv) {
  return allsat::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
