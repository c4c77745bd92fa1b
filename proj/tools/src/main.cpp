#include <iostream>

#include "wap/cli/cli.hpp"

int main(int argc, char** argv) {
  return wap::cli::run(argc, argv, std::cout, std::cerr);
}
