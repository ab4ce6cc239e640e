#include <string>
#include <vector>

#include "pfd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pfd::run_cli(args);
}
