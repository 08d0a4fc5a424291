#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace leibniz::cli {

// Exit codes: 0 success / claims hold, 1 claims fail, 2 malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
