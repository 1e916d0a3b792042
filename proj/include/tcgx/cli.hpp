#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcgx::cli {

/// Exit codes shared by every subcommand.
enum Exit : int
{
    ok = 0,
    validation_failure = 1, ///< also: roundtrip mismatch
    decode_failure = 2,     ///< also: I/O, usage and configuration errors
};

/// Runs `tcgx <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tcgx::cli
