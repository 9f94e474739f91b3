#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fds/limits.hpp"

namespace fds {

/// A state of K^n packed into an integer: coordinate x_k is bit k-1.
using State = std::uint32_t;

/// Squarefree monomial over x_1..x_n, stored as a variable mask (bit k-1 is
/// x_k). The empty mask is the constant monomial 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t mask) : mask_(mask) {}

  static constexpr Monomial one() { return Monomial{}; }
  static Monomial var(int k);

  constexpr std::uint32_t mask() const { return mask_; }
  int degree() const { return std::popcount(mask_); }
  bool contains(int k) const { return (mask_ >> (k - 1)) & 1u; }
  bool eval(State s) const { return (s & mask_) == mask_; }

  // x_j * x_j = x_j, so multiplication is a union of variable sets.
  constexpr Monomial operator*(Monomial other) const {
    return Monomial{mask_ | other.mask_};
  }

  constexpr auto operator<=>(const Monomial&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

/// Polynomial over GF(2) in algebraic normal form. Terms are kept sorted by
/// mask and duplicates cancel on construction, so equality is structural.
class Anf {
 public:
  explicit Anf(int n);
  Anf(int n, std::vector<Monomial> terms);

  static Anf zero(int n) { return Anf(n); }
  static Anf one(int n) { return Anf(n, {Monomial::one()}); }
  static Anf var(int n, int k);

  int num_vars() const { return n_; }
  std::span<const Monomial> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  /// Linear in the K-linear sense: no constant term and every term of degree 1.
  bool is_linear() const;

  /// Throws DimensionError when s has bits at or above n.
  bool eval(State s) const;

  std::uint32_t support_mask() const;
  /// Variable indices (1-based, ascending) occurring in some monomial.
  std::vector<int> support() const;

  Anf operator+(const Anf& other) const;
  Anf operator*(const Anf& other) const;

  bool operator==(const Anf&) const = default;

 private:
  int n_;
  std::vector<Monomial> terms_;
};

/// Values of a Boolean function on all 2^n states, packed 64 per word. Entry s
/// is the value on the state whose bit k-1 is x_k.
class TruthTable {
 public:
  explicit TruthTable(int n);

  int num_vars() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  bool get(State s) const { return (words_[s >> 6] >> (s & 63)) & 1u; }
  void set(State s, bool value);

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const TruthTable&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

TruthTable anf_to_tt(const Anf& p);
Anf tt_to_anf(const TruthTable& t);

/// Monomials ordered by degree, then lexicographically by index tuple:
/// 1, x1, x2, x3, x1x2, x1x3, x2x3, x1x2x3 for n = 3.
std::vector<Monomial> graded_basis(int n);

/// Coefficients of p against graded_basis(p.num_vars()).
std::vector<std::uint8_t> coefficient_row(const Anf& p);
Anf from_coefficient_row(int n, std::span<const std::uint8_t> row);

}  // namespace fds
