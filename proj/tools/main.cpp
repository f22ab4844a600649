#include <cstdlib>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> prec;
  if (const char* env = std::getenv("ZETAVAL_PREC")) prec = env;
  return zetaval::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, prec);
}
