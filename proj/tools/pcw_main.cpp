#include <iostream>

#include "pcw/cli.hpp"

int main(int argc, char** argv) {
  return pcw::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
