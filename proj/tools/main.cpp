#include <iostream>
#include <string>
#include <vector>

#include "lab_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return stacksort::lab::run(args, std::cout, std::cerr);
}
