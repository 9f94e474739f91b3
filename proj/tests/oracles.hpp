#pragma once

// Brute-force oracles used only by tests. None of them call the routine they
// are checked against.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fds/anf.hpp"
#include "fds/graph.hpp"
#include "fds/system.hpp"

namespace fds::oracle {

/// Tries all 2^m orientations and keeps the acyclic ones.
inline std::uint64_t acyclic_orientations(const DepGraph& g) {
  const auto edges = g.edges();
  const int n = g.num_vertices();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<std::vector<int>> out(n + 1);
    std::vector<int> indeg(n + 1, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if ((mask >> e) & 1u) std::swap(a, b);
      out[a].push_back(b);
      ++indeg[b];
    }
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++removed;
      for (int u : out[v])
        if (--indeg[u] == 0) ready.push_back(u);
    }
    if (removed == n) ++count;
  }
  return count;
}

/// Evaluates a polynomial at a state straight from the definition: each
/// monomial is the product of its variables' values.
inline bool eval_by_product(const Anf& p, State s) {
  int sum = 0;
  for (Monomial m : p.terms()) {
    int prod = 1;
    for (int k = 1; k <= p.num_vars(); ++k)
      if (m.contains(k)) prod *= static_cast<int>((s >> (k - 1)) & 1u);
    sum += prod;
  }
  return sum % 2 == 1;
}

/// Applies letters one by one through apply_local.
inline std::vector<State> compose_by_letters(const System& f, const Word& w) {
  std::vector<State> out(std::size_t{1} << f.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    State x = static_cast<State>(s);
    for (int l : w.letters()) x = apply_local(f, l, x);
    out[s] = x;
  }
  return out;
}

/// All graphs on n vertices, in edge-mask order.
inline std::vector<DepGraph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  std::vector<DepGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    DepGraph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1u) g.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(g);
  }
  return out;
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  for (int k = 0; k < n; ++k) image[k] = k + 1;
  std::vector<Permutation> out;
  do out.emplace_back(image);
  while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace fds::oracle
