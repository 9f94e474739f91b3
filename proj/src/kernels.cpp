#include "fds/kernels.hpp"

#include <omp.h>

#include "fds/errors.hpp"

namespace fds {

void set_threads(int count) {
  static const int runtime_default = omp_get_max_threads();
  omp_set_num_threads(count > 0 ? count : runtime_default);
}

int max_threads() { return omp_get_max_threads(); }

namespace kernels {

namespace {

// Bit j of kLow[k] is set iff bit k of j is clear.
constexpr std::uint64_t kLow[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

// Bit j of kProjection[k] is the value of x_{k+1} at state j.
constexpr std::uint64_t kProjection[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

// Below this many words the OpenMP fork costs more than the loop.
constexpr std::size_t kParallelWords = 1024;

std::uint64_t valid_bits(int n) {
  return n >= 6 ? ~0ull : ((1ull << (1u << n)) - 1ull);
}

}  // namespace

void moebius_transform(std::span<std::uint64_t> words, int n) {
  const int in_word = n < 6 ? n : 6;
  const std::int64_t count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static) if (words.size() >= kParallelWords)
  for (std::int64_t w = 0; w < count; ++w) {
    std::uint64_t x = words[w];
    for (int k = 0; k < in_word; ++k) x ^= (x & kLow[k]) << (1u << k);
    words[w] = x;
  }
  if (n < 6) {
    words[0] &= valid_bits(n);
    return;
  }
  for (int k = 6; k < n; ++k) {
    const std::int64_t stride = std::int64_t{1} << (k - 6);
    const std::int64_t pairs = count / 2;
#pragma omp parallel for schedule(static) if (words.size() >= kParallelWords)
    for (std::int64_t p = 0; p < pairs; ++p) {
      // p-th index with bit (k-6) clear.
      const std::int64_t lo = ((p / stride) * 2 * stride) + (p % stride);
      words[lo + stride] ^= words[lo];
    }
  }
}

std::vector<State> compose_bitsliced(int n, std::span<const Anf> updates,
                                     std::span<const int> letters) {
  const std::size_t states = std::size_t{1} << n;
  const std::int64_t blocks = static_cast<std::int64_t>(n >= 6 ? states / 64 : 1);
  const std::uint64_t valid = valid_bits(n);
  std::vector<State> next(states);

#pragma omp parallel for schedule(static) if (blocks >= 16)
  for (std::int64_t b = 0; b < blocks; ++b) {
    std::uint64_t slice[kHardMaxVars];
    for (int k = 0; k < n; ++k) {
      if (k < 6)
        slice[k] = kProjection[k] & valid;
      else
        slice[k] = ((b >> (k - 6)) & 1) ? ~0ull : 0ull;
    }
    for (int letter : letters) {
      std::uint64_t value = 0;
      for (Monomial m : updates[letter - 1].terms()) {
        std::uint64_t term = valid;
        std::uint32_t vars = m.mask();
        while (vars) {
          term &= slice[std::countr_zero(vars)];
          vars &= vars - 1;
        }
        value ^= term;
      }
      slice[letter - 1] = value;
    }
    const std::size_t width = n >= 6 ? 64 : states;
    for (std::size_t j = 0; j < width; ++j) {
      State s = 0;
      for (int k = 0; k < n; ++k) s |= static_cast<State>((slice[k] >> j) & 1u) << k;
      next[static_cast<std::size_t>(b) * 64 + j] = s;
    }
  }
  return next;
}

}  // namespace kernels

namespace reference {

std::vector<std::uint8_t> moebius_transform(std::span<const std::uint8_t> values,
                                            int n) {
  const std::size_t size = std::size_t{1} << n;
  if (values.size() != size) throw DimensionError("table size is not 2^n");
  std::vector<std::uint8_t> out(size, 0);
  for (std::size_t m = 0; m < size; ++m) {
    std::uint8_t acc = 0;
    // Enumerate all submasks of m, including 0.
    for (std::size_t s = m;; s = (s - 1) & m) {
      acc ^= values[s] & 1u;
      if (s == 0) break;
    }
    out[m] = acc;
  }
  return out;
}

std::vector<State> compose_pointwise(int n, std::span<const Anf> updates,
                                     std::span<const int> letters) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<State> next(states);
  for (std::size_t s0 = 0; s0 < states; ++s0) {
    State s = static_cast<State>(s0);
    for (int letter : letters) {
      const State bit = State{1} << (letter - 1);
      s = updates[letter - 1].eval(s) ? (s | bit) : (s & ~bit);
    }
    next[s0] = s;
  }
  return next;
}

}  // namespace reference

}  // namespace fds
