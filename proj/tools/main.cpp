#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  deckwork::cli::RunConfig config;
  if (auto code = deckwork::cli::parse_args(argc, argv, config, std::cout, std::cerr)) return *code;
  deckwork::cli::apply_environment();
  return deckwork::cli::run(config, std::cout, std::cerr);
}
