#include <iostream>

#include "qhrep/cli.hpp"

int main(int argc, char** argv) {
  return qhrep::run_cli(argc, argv, std::cout, std::cerr);
}
