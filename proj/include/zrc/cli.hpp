#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zrc/special_functions.hpp"
#include "zrc/verifier.hpp"

namespace zrc::cli {

/// Parses "re,im" or "re". Throws ConfigError on malformed input.
Complex parse_complex(std::string_view text);

/// Parses "RE0:RE1:STEP:IM0:IM1:STEP"; the offset is supplied separately.
GridSpec parse_grid(std::string_view text, double offset);

/// Runs the command line (without the program name). Exit codes: 0 success,
/// 1 runtime failure or a verdict mismatch, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zrc::cli
