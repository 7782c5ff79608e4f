#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bsmaps {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// `args` excludes the program name. JSON and SVG go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// All 2^N words over {P, Q} in lexicographic order (P < Q).
std::vector<std::string> all_extremal_words(int genus);
/// `count` distinct words drawn with a seeded generator.
std::vector<std::string> random_extremal_words(int genus, std::size_t count, std::uint64_t seed);

}  // namespace bsmaps
