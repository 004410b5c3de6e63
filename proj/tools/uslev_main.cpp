#include <iostream>

#include "uslev/cli.hpp"

int main(int argc, char** argv) {
  return uslev::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
