#pragma once

#include <chw/lattice.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace chw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rows of whitespace-separated integers, or a JSON array of arrays.
/// Throws std::invalid_argument on malformed input.
IntMatrix read_matrix_text(const std::string& text);

}  // namespace chw::cli
