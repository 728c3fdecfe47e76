#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rogetkb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;         // parse/validation errors, bad usage
inline constexpr int kIoError = 2;
inline constexpr int kTargetMissing = 3;   // unknown word or address
inline constexpr int kNoCapability = 4;    // command needs a lexicon

/// Runs `rogetkb <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rogetkb::cli
