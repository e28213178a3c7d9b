#include <iostream>
#include <string>
#include <vector>

#include "frobforge/cli.hpp"

int main(int argc, char** argv) {
  return frobforge::cli::main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
