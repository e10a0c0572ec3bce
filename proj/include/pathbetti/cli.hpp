#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pathbetti/betti.hpp"

namespace pathbetti::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2, kResourceCap = 3 };

/// Rows by homological index i, columns by total degree j, zeros as ".".
std::string render_text(const BettiTable& table, const std::string& header);
/// {"entries":[{"i":0,"j":0,"b":1},...]} in (i, j) order.
std::string render_json(const BettiTable& table);
/// Header "i,j,b", one entry per line in (i, j) order.
std::string render_csv(const BettiTable& table);
/// Inverse of render_json. Throws InputError.
BettiTable parse_json_table(const std::string& text);

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathbetti::cli
