#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homprelie {
namespace cli {

/// Dispatches one command line (without the program name) and writes the JSON
/// report to `out` (or the file given via --output). Exit codes: 0 success,
/// 1 a checked property failed, 2 malformed input, 3 internal assertion.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cli
} // namespace homprelie
