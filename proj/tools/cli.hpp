#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pbci::cli {

// Exit codes: 0 success, 1 the examined property is false, 2 bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbci::cli
