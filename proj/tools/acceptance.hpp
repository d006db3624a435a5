#pragma once

#include <functional>
#include <string>
#include <vector>

namespace binet::acceptance {

struct Outcome {
  int id = 0;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs criteria 1..13 (or only `only` when nonzero), calling `report` after each.
std::vector<Outcome> run(int only = 0, const std::function<void(const Outcome&)>& report = {});

std::string line(const Outcome& o);

}  // namespace binet::acceptance
