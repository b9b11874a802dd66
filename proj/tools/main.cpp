#include <string>
#include <vector>

#include "lorenz_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lorenz::cli::run_cli(args);
}
