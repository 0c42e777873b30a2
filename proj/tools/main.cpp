#include <iostream>

#include "subnetrel/cli.hpp"

int main(int argc, char** argv) {
  return subnetrel::cli::run(argc, argv, std::cout, std::cerr);
}
