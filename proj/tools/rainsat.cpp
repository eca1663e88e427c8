#include <iostream>

#include "rainsat/cli.hpp"

int main(int argc, char** argv) {
  return rainsat::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
