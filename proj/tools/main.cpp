#include <iostream>
#include <string>
#include <vector>

#include "combmat/cli.hpp"

int main(int argc, char** argv) {
  return combmat::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
