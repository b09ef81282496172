#include <iostream>

#include "ratcat_cli.hpp"

int main(int argc, char** argv) {
  return ratcat::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
