#include "fds/depgraph.hpp"

#include <string>

#include "fds/errors.hpp"

namespace fds {

System linear_system(const BitMatrix& m) {
  const int n = m.size();
  std::vector<Anf> updates;
  updates.reserve(n);
  for (int i = 1; i <= n; ++i) {
    std::vector<Monomial> terms;
    for (int j = 1; j <= n; ++j)
      if (m.at(i, j)) terms.push_back(Monomial::var(j));
    updates.emplace_back(n, std::move(terms));
  }
  return System(std::move(updates));
}

std::optional<Permutation> graph_equivalent(const System& f, const System& g,
                                            const Limits& limits) {
  if (f.size() != g.size())
    throw DimensionError("systems of dimension " + std::to_string(f.size()) + " and " +
                         std::to_string(g.size()));
  const DepGraph cf = complement(phi(f));
  const DepGraph cg = complement(phi(g));
  auto p = find_graph_iso(cf, cg, limits);
  if (p && perm_act(*p, adjacency(cf)) != adjacency(cg)) return std::nullopt;
  return p;
}

bool is_d_local(const System& f, const DepGraph& y, int d) {
  const int n = f.size();
  if (y.num_vertices() != n)
    throw DimensionError("graph on " + std::to_string(y.num_vertices()) +
                         " vertices for a system of dimension " + std::to_string(n));
  if (d < 0) throw DimensionError("locality radius must be nonnegative");
  if (d >= n) return true;
  for (int j = 1; j <= n; ++j)
    if (f.update(j).support_mask() & ~static_cast<std::uint32_t>(ball(y, j, d)))
      return false;
  return true;
}

bool psi_membership(const System& f, const DepGraph& g) {
  return is_d_local(f, complement(g), 1);
}

PsiCardinality psi_cardinality(const DepGraph& g) {
  const DepGraph c = complement(g);
  PsiCardinality card;
  for (int i = 1; i <= c.num_vertices(); ++i)
    card.log2 += std::uint64_t{1} << (1 + c.degree(i));
  return card;
}

DepGraph phi_of_psi(const DepGraph& g) {
  const int n = g.num_vertices();
  const DepGraph c = complement(g);
  // Union of supports over every admissible update of each coordinate.
  std::vector<std::uint32_t> reach(n, 0);
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t nbhd = static_cast<std::uint32_t>(ball(c, i, 1));
    const int k = std::popcount(nbhd);
    if (k > 4)
      throw BudgetError("closed neighborhood of vertex " + std::to_string(i) +
                        " has " + std::to_string(k) + " > 4 vertices");
    std::vector<int> vars;
    for (std::uint32_t m = nbhd; m; m &= m - 1) vars.push_back(std::countr_zero(m));
    const std::uint32_t functions = std::uint32_t{1} << (1u << k);
    for (std::uint32_t table = 0; table < functions; ++table) {
      TruthTable local(k);
      for (std::uint32_t s = 0; s < (1u << k); ++s) local.set(s, (table >> s) & 1u);
      const std::uint32_t local_support = tt_to_anf(local).support_mask();
      for (int b = 0; b < k; ++b)
        if ((local_support >> b) & 1u) reach[i - 1] |= std::uint32_t{1} << vars[b];
    }
  }
  DepGraph out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!((reach[j - 1] >> (i - 1)) & 1u) && !((reach[i - 1] >> (j - 1)) & 1u))
        out.add_edge(i, j);
  return out;
}

}  // namespace fds
