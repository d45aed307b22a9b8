#include <string>
#include <vector>

#include "sftlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sftlab::run_cli(args);
}
