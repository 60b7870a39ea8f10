#include <iostream>
#include <string>
#include <vector>

#include "centerpoint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return centerpoint::run(args, std::cout, std::cerr);
}
