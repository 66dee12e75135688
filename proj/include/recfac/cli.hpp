#pragma once

#include "recfac/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace recfac::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFail = 1,
  kUsage = 2,
  kDefect = 3,
  kStall = 4,
};

/// "a,b,c" (highest first) when degree is negative, otherwise the
/// lowest-first list c0,...,cd of exactly degree + 1 entries.
Polynomial parse_poly(const std::string& text, int degree = -1);

std::vector<Int> parse_int_list(const std::string& text);

/// Runs the tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recfac::cli
