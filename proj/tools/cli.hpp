#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ghcode/sequences.hpp"

namespace ghcode::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2 };

/// "std", "a=<int>" (meaning (a, 1-a)), "a=<int>,b=<int>" or a bare "<int>"
/// for the a-shorthand. Throws std::invalid_argument on anything else.
SequenceDef parse_sequence(std::string_view selector);

/// Comma-separated list of sequence items, each "std", "<a>" or "<a>:<b>".
std::vector<SequenceDef> parse_sequence_set(std::string_view list);

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace ghcode::cli
