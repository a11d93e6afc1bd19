#include <iostream>

#include "steiner/cli.hpp"

int main(int argc, char** argv) {
  return steiner::cli::main_entry(argc, argv, std::cout, std::cerr);
}
