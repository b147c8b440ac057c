#include "gvkit/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return gvkit::cli::run({argv + 1, argv + argc}, std::cin, std::cout,
                         std::cerr);
}
