#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "fds/anf.hpp"
#include "fds/graph.hpp"
#include "fds/limits.hpp"

namespace fds {

/// Nonempty update schedule over 1..n; letters may repeat.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Throws DimensionError unless the word is nonempty with letters in 1..n.
  void check(int n) const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

/// A map K^n -> K^n stored as one successor per state.
class TransitionMap {
 public:
  TransitionMap(int n, std::vector<State> next);
  static TransitionMap identity(int n);

  int num_vars() const { return n_; }
  std::size_t size() const { return next_.size(); }
  State operator()(State s) const { return next_[s]; }
  std::span<const State> successors() const { return next_; }

  /// then o *this: apply *this first.
  TransitionMap followed_by(const TransitionMap& then) const;

  auto operator<=>(const TransitionMap&) const = default;

 private:
  int n_;
  std::vector<State> next_;
};

/// n-tuple of local functions; coordinate i is rewritten by update(i) and all
/// other coordinates pass through.
class System {
 public:
  /// Throws DimensionError unless every update has updates.size() variables.
  explicit System(std::vector<Anf> updates);

  int size() const { return static_cast<int>(updates_.size()); }
  const Anf& update(int i) const;
  std::span<const Anf> updates() const { return updates_; }

  System with_update(int i, Anf update) const;

  bool operator==(const System&) const = default;

 private:
  std::vector<Anf> updates_;
};

State apply_local(const System& f, int i, State s);

/// The map f^i alone.
TransitionMap local_map(const System& f, int i);

/// f^{w_t} o ... o f^{w_1}; the first letter runs first.
TransitionMap compose_word(const System& f, const Word& w);

/// Edge (i,j) iff x_i is absent from f^j_j and x_j is absent from f^i_i.
DepGraph phi(const System& f);

/// Dependency graph from the commutation definition: edge (i,j) iff
/// g^i o g^j = g^j o g^i on all states, for f itself and for every tuple g
/// obtained from f by swapping one coordinate's update for one of the four
/// functions of that coordinate alone (x_k, 0, 1, 1 + x_k).
/// Throws BudgetError above limits.oracle_max_n.
DepGraph phi_oracle(const System& f, const Limits& limits = {});

}  // namespace fds
