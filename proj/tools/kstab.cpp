#include <iostream>

#include "kstab/cli.hpp"

int main(int argc, char** argv) {
  return kstab::cli::run(argc, argv, std::cout, std::cerr);
}
