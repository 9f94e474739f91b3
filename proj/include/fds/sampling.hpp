#pragma once

#include <cstdint>
#include <random>

#include "fds/anf.hpp"
#include "fds/graph.hpp"
#include "fds/system.hpp"

namespace fds {

/// Engine used by every randomized routine. Results depend only on the raw
/// engine output, never on a standard-library distribution.
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20020611;

/// Uniform in [0, bound), by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniformly random function of the variables in `support` (a mask), written
/// as an ANF in n variables.
Anf random_anf(int n, std::uint32_t support, Rng& rng);

/// Every coordinate update uniform over all functions K^n -> K.
System random_system(int n, Rng& rng);

/// Each of the n(n-1)/2 possible edges present with probability 1/2.
DepGraph random_graph(int n, Rng& rng);

Permutation random_permutation(int n, Rng& rng);

/// Random member of Psi(G): coordinate i reads only its closed neighborhood
/// in the complement of g, uniformly over such functions.
System sample_psi(const DepGraph& g, Rng& rng);

}  // namespace fds
