#include <iostream>

#include "gibbs/cli/commands.hpp"

int main(int argc, char** argv) {
  return gibbs::cli::run_cli(argc, argv, std::cout, std::cerr);
}
