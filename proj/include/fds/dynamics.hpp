#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "fds/graph.hpp"
#include "fds/limits.hpp"
#include "fds/system.hpp"

namespace fds {

/// Functional digraph on the 2^n states: one outgoing transition per state.
struct StateSpace {
  int n = 0;
  std::vector<State> successor;
};

StateSpace state_space(const TransitionMap& m);

/// Periodic part of a state space. Each cycle starts at its smallest state and
/// follows successors; cycles are ordered by their first state.
struct LimitCycles {
  std::vector<std::vector<State>> cycles;

  /// Cycle lengths, ascending.
  std::vector<std::size_t> multiset() const;
};

/// Repeatedly deletes states of in-degree zero; what survives is exactly the
/// set of periodic states.
LimitCycles limit_cycles(const StateSpace& ss);

/// Steps from each state until it first lands on a periodic state.
std::vector<std::size_t> transient_lengths(const StateSpace& ss);

/// The limit-cycle subdigraph of a functional digraph is a disjoint union of
/// directed cycles, and two such unions are isomorphic iff they have the same
/// number of cycles of each length. So this compares cycle-length multisets.
bool stably_isomorphic(const TransitionMap& a, const TransitionMap& b);

/// Coordinate permutation acting on states: x_k moves to coordinate p(k).
State permute_coordinates(const Permutation& p, State s);

/// phi o m o phi^-1 with phi = permute_coordinates(p, .).
TransitionMap conjugate_by_coord_perm(const TransitionMap& m, const Permutation& p);

/// phi o m o phi^-1 for an arbitrary bijection phi of the states, given as
/// its value table. Throws DimensionError if phi is not a bijection.
TransitionMap conjugate(const TransitionMap& m, std::span<const State> phi);

/// All maps f^w over nonempty words w: the least set containing each f^i that
/// is closed under post-composition with every f^i.
class MonoidClosure {
 public:
  MonoidClosure(int n, std::set<TransitionMap> maps)
      : n_(n), maps_(std::move(maps)) {}

  int num_vars() const { return n_; }
  std::size_t size() const { return maps_.size(); }
  const std::set<TransitionMap>& maps() const { return maps_; }
  bool contains(const TransitionMap& m) const { return maps_.count(m) != 0; }

 private:
  int n_;
  std::set<TransitionMap> maps_;
};

/// Throws BudgetError above limits.closure_max_n or limits.max_closure maps.
MonoidClosure monoid_closure(const System& f, const Limits& limits = {});

/// State written as x1 x2 ... xn, e.g. "101" for x1 = 1, x2 = 0, x3 = 1.
std::string state_label(State s, int n);

/// Nodes in numeric state order, one edge per state. Throws BudgetError above
/// limits.dot_max_n.
std::string dot_export(const StateSpace& ss, const Limits& limits = {});
std::string dep_dot_export(const DepGraph& g);

}  // namespace fds
