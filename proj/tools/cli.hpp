#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace glstep::cli {

inline constexpr const char* kVersion = "glstep 0.1.0";

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kSolver = 3;

// Runs one command line (args excludes the program name). Data go to out
// only with --stdout; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

// CSV field text: 17 significant digits for reals, 1/0 for booleans, empty
// for missing values, RFC-4180 quoting for text.
std::string csv_field(const Cell& c);

// "lo:hi:step" (inclusive, step > 0), a comma list, or a single value.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace glstep::cli
