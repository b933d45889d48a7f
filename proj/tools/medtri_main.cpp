#include <iostream>

#include "medtri/cli.hpp"

int main(int argc, char** argv) {
  return medtri::run_cli(argc, argv, std::cout, std::cerr);
}
