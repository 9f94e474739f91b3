#pragma once

#include <iosfwd>

namespace fds::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kBudgetError = 3;
inline constexpr int kDimensionError = 4;
inline constexpr int kIoError = 5;

/// Runs one command. Results go to out; failures produce one JSON error line
/// on err and a nonzero exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fds::cli
