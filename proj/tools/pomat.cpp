#include <iostream>
#include <string>
#include <vector>

#include "pomat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const pomat::cli::CommandResult r = pomat::cli::run(std::move(args));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
