#include <iostream>

#include "biquad/cli.hpp"

int main(int argc, char** argv) {
  return biquad::run_cli(argc, argv, std::cout, std::cerr);
}
