#include <iostream>

#include "bihom/cli.hpp"

int main(int argc, char** argv) {
  return bihom::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
