#pragma once

#include "eisen/numerics.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace eisen::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;

/// "2,4,2" -> {2, 4, 2}. Parity and sign are checked by IndexTuple.
std::vector<int> parse_indices(const std::string& text);

/// Accepts "a+bi", "a-bi", "bi", "i", plain "a", and "rho" for exp(2 pi i / 3).
Complex parse_tau(const std::string& text);

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eisen::cli
