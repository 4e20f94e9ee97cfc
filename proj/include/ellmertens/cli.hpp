#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellmertens::cli {

inline constexpr const char* kFormatVersion = "1";

/// Exit codes: 0 success, 1 usage error, 2 mathematically invalid input
/// (Hasse violation, inadmissible trace, ...), 3 an oracle disagreed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellmertens::cli
