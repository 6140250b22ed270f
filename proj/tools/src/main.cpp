#include <iostream>

#include "wzsum_cli/cli.hpp"

int main(int argc, char** argv) {
  return wzsum::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
