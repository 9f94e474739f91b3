#pragma once

// Data-parallel inner loops. Each kernel has a plain serial counterpart in
// namespace reference that the tests and benchmarks compare it against.

#include <cstdint>
#include <span>
#include <vector>

#include "fds/anf.hpp"

namespace fds {

/// Worker count used by the OpenMP kernels; 0 restores the runtime default.
void set_threads(int count);
int max_threads();

namespace kernels {

/// In-place subset-lattice Moebius transform over GF(2) of a packed table of
/// 2^n bits. Self-inverse: maps a truth table to its ANF coefficient vector
/// (indexed by monomial mask) and back.
void moebius_transform(std::span<std::uint64_t> words, int n);

/// Successor of every state under updates[letters.back()-1] o ... o
/// updates[letters.front()-1], evaluated 64 states at a time on bit-sliced
/// coordinate tables. Blocks of states are distributed across threads.
std::vector<State> compose_bitsliced(int n, std::span<const Anf> updates,
                                     std::span<const int> letters);

}  // namespace kernels

namespace reference {

/// coefficient[m] = XOR of values[s] over all s contained in m. O(3^n).
std::vector<std::uint8_t> moebius_transform(std::span<const std::uint8_t> values,
                                            int n);

/// One state at a time, one letter at a time, via Anf::eval.
std::vector<State> compose_pointwise(int n, std::span<const Anf> updates,
                                     std::span<const int> letters);

}  // namespace reference

}  // namespace fds
