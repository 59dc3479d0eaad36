#include <iostream>
#include <string>
#include <vector>

#include "harmonic_shear/cli.hpp"

int main(int argc, char** argv) {
  return hshear::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
