#include <vector>

#include "ydforge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ydforge::run(args);
}
