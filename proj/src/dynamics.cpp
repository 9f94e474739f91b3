#include "fds/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "fds/errors.hpp"

namespace fds {

StateSpace state_space(const TransitionMap& m) {
  return {m.num_vars(), std::vector<State>(m.successors().begin(), m.successors().end())};
}

std::vector<std::size_t> LimitCycles::multiset() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace {

// periodic[s] after peeling every state that has no remaining predecessor.
std::vector<char> periodic_states(const StateSpace& ss) {
  const std::size_t size = ss.successor.size();
  std::vector<std::size_t> indeg(size, 0);
  for (State s : ss.successor) ++indeg[s];
  std::vector<char> alive(size, 1);
  std::vector<State> queue;
  for (std::size_t s = 0; s < size; ++s)
    if (indeg[s] == 0) queue.push_back(static_cast<State>(s));
  while (!queue.empty()) {
    const State s = queue.back();
    queue.pop_back();
    alive[s] = 0;
    if (--indeg[ss.successor[s]] == 0) queue.push_back(ss.successor[s]);
  }
  return alive;
}

}  // namespace

LimitCycles limit_cycles(const StateSpace& ss) {
  const auto periodic = periodic_states(ss);
  std::vector<char> done(periodic.size(), 0);
  LimitCycles lc;
  for (std::size_t s = 0; s < periodic.size(); ++s) {
    if (!periodic[s] || done[s]) continue;
    std::vector<State> cycle;
    State x = static_cast<State>(s);
    do {
      cycle.push_back(x);
      done[x] = 1;
      x = ss.successor[x];
    } while (x != s);
    lc.cycles.push_back(std::move(cycle));
  }
  return lc;
}

std::vector<std::size_t> transient_lengths(const StateSpace& ss) {
  const auto periodic = periodic_states(ss);
  const std::size_t size = ss.successor.size();
  // Reverse BFS from the periodic states.
  std::vector<std::vector<State>> preds(size);
  for (std::size_t s = 0; s < size; ++s) preds[ss.successor[s]].push_back(static_cast<State>(s));
  std::vector<std::size_t> depth(size, 0);
  std::deque<State> queue;
  for (std::size_t s = 0; s < size; ++s)
    if (periodic[s]) queue.push_back(static_cast<State>(s));
  std::vector<char> seen(periodic.begin(), periodic.end());
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (State p : preds[s]) {
      if (seen[p]) continue;
      seen[p] = 1;
      depth[p] = depth[s] + 1;
      queue.push_back(p);
    }
  }
  return depth;
}

bool stably_isomorphic(const TransitionMap& a, const TransitionMap& b) {
  return limit_cycles(state_space(a)).multiset() == limit_cycles(state_space(b)).multiset();
}

State permute_coordinates(const Permutation& p, State s) {
  State out = 0;
  for (int k = 1; k <= p.size(); ++k)
    if ((s >> (k - 1)) & 1u) out |= State{1} << (p(k) - 1);
  return out;
}

TransitionMap conjugate_by_coord_perm(const TransitionMap& m, const Permutation& p) {
  if (p.size() != m.num_vars())
    throw DimensionError("coordinate permutation size differs from map dimension");
  std::vector<State> phi(m.size());
  for (std::size_t s = 0; s < m.size(); ++s)
    phi[s] = permute_coordinates(p, static_cast<State>(s));
  return conjugate(m, phi);
}

TransitionMap conjugate(const TransitionMap& m, std::span<const State> phi) {
  if (phi.size() != m.size()) throw DimensionError("bijection size differs from state count");
  std::vector<State> inverse(m.size(), 0);
  std::vector<char> hit(m.size(), 0);
  for (std::size_t s = 0; s < phi.size(); ++s) {
    if (phi[s] >= m.size() || hit[phi[s]]) throw DimensionError("state map is not a bijection");
    hit[phi[s]] = 1;
    inverse[phi[s]] = static_cast<State>(s);
  }
  std::vector<State> out(m.size());
  for (std::size_t s = 0; s < m.size(); ++s) out[s] = phi[m(inverse[s])];
  return TransitionMap(m.num_vars(), std::move(out));
}

MonoidClosure monoid_closure(const System& f, const Limits& limits) {
  const int n = f.size();
  if (n > limits.closure_max_n)
    throw BudgetError("composition closure limited to n <= " +
                      std::to_string(limits.closure_max_n) + ", got " + std::to_string(n));
  std::vector<TransitionMap> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(local_map(f, i));

  std::set<TransitionMap> maps;
  std::deque<TransitionMap> queue;
  for (const auto& g : gens)
    if (maps.insert(g).second) queue.push_back(g);
  while (!queue.empty()) {
    const TransitionMap cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      TransitionMap next = cur.followed_by(g);
      if (maps.count(next)) continue;
      if (maps.size() >= limits.max_closure)
        throw BudgetError("composition closure exceeds " + std::to_string(limits.max_closure) +
                          " maps");
      maps.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return MonoidClosure(n, std::move(maps));
}

std::string state_label(State s, int n) {
  std::string label(n, '0');
  for (int k = 0; k < n; ++k)
    if ((s >> k) & 1u) label[k] = '1';
  return label;
}

std::string dot_export(const StateSpace& ss, const Limits& limits) {
  if (ss.n > limits.dot_max_n)
    throw BudgetError("DOT export limited to n <= " + std::to_string(limits.dot_max_n));
  std::ostringstream out;
  out << "digraph state_space {\n";
  for (std::size_t s = 0; s < ss.successor.size(); ++s)
    out << "  \"" << state_label(static_cast<State>(s), ss.n) << "\";\n";
  for (std::size_t s = 0; s < ss.successor.size(); ++s)
    out << "  \"" << state_label(static_cast<State>(s), ss.n) << "\" -> \""
        << state_label(ss.successor[s], ss.n) << "\";\n";
  out << "}\n";
  return out.str();
}

std::string dep_dot_export(const DepGraph& g) {
  std::ostringstream out;
  out << "graph dependency {\n";
  for (int v = 1; v <= g.num_vertices(); ++v) out << "  " << v << ";\n";
  for (auto [i, j] : g.edges()) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fds
