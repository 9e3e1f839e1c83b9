#include <iostream>

#include "vkit/cli.hpp"

int main(int argc, char** argv) {
  return vkit::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
