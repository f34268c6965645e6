#include <iostream>
#include <string>
#include <vector>

#include "degbern/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto out = degbern::run_cli(args);
  std::cout << out.document << std::flush;
  std::cerr << out.diagnostics;
  return out.exit_code;
}
