#pragma once

#include <cstdint>

namespace fds {

/// Largest dimension ever accepted; truth tables have 2^n entries.
inline constexpr int kHardMaxVars = 28;

/// Enumeration budgets. Every exhaustive routine checks its cap up front and
/// throws BudgetError instead of running away.
struct Limits {
  int max_vars = 24;
  int oracle_max_n = 6;
  int iso_max_n = 10;
  int closure_max_n = 4;
  int dot_max_n = 12;
  std::uint64_t max_words = 10'000'000;
  std::uint64_t max_class = 1'000'000;
  std::uint64_t max_closure = 1'000'000;

  /// Defaults with max_vars taken from FDS_MAX_N when set.
  /// Throws BudgetError when FDS_MAX_N exceeds kHardMaxVars.
  static Limits from_env();
};

}  // namespace fds
