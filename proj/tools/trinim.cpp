#include <iostream>

#include "trinim/cli.hpp"

int main(int argc, char** argv) {
  return trinim::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
