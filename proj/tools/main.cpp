#include <iostream>

#include "ordpigeon/cli.hpp"

int main(int argc, char** argv) {
  return ordpigeon::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
