#include <iostream>

#include "bidisk/cli.hpp"

int main(int argc, char** argv) {
  return bidisk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
