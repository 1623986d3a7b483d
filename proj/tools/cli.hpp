#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqcrit::cli {

enum Exit : int { kOk = 0, kDomainError = 1, kNegative = 2 };

/// Runs one command. `args` excludes the program name. JSON (or CSV) goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqcrit::cli
