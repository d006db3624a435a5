#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binet::cli {

// args excludes the program name. Exit codes: 0 ok, 1 selftest failure,
// 2 usage error, 3 domain/precondition violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binet::cli
