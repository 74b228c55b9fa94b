#include <iostream>

#include "hfsplit/cli.hpp"

int main(int argc, char** argv) {
  return hfsplit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
