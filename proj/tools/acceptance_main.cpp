#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::stoi(argv[1]) : 0;
  int failed = 0;
  binet::acceptance::run(only, [&](const binet::acceptance::Outcome& o) {
    std::cout << binet::acceptance::line(o) << std::endl;
    if (!o.pass) ++failed;
  });
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
