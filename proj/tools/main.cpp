#include <iostream>
#include <string>
#include <vector>

#include "isoforge/cli.hpp"

int main(int argc, char** argv) {
  return isoforge::runCli(std::vector<std::string>(argv + 1, argv + argc),
                          std::cout, std::cerr);
}
