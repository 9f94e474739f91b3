#include "fds/sampling.hpp"

#include <bit>
#include <numeric>

#include "fds/depgraph.hpp"

namespace fds {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

Anf random_anf(int n, std::uint32_t support, Rng& rng) {
  const int k = std::popcount(support);
  std::vector<int> vars;
  for (std::uint32_t m = support; m; m &= m - 1) vars.push_back(std::countr_zero(m));
  if (k == 0) return (rng() & 1u) ? Anf::one(n) : Anf::zero(n);

  TruthTable local(k);
  for (auto& w : local.words()) w = rng();
  if (k < 6) local.words()[0] &= (std::uint64_t{1} << (1u << k)) - 1;
  std::vector<Monomial> terms;
  const Anf packed = tt_to_anf(local);
  for (Monomial m : packed.terms()) {
    std::uint32_t mask = 0;
    for (int b = 0; b < k; ++b)
      if ((m.mask() >> b) & 1u) mask |= std::uint32_t{1} << vars[b];
    terms.emplace_back(mask);
  }
  return Anf(n, std::move(terms));
}

System random_system(int n, Rng& rng) {
  const std::uint32_t all = n >= 32 ? ~0u : (1u << n) - 1u;
  std::vector<Anf> updates;
  for (int i = 0; i < n; ++i) updates.push_back(random_anf(n, all, rng));
  return System(std::move(updates));
}

DepGraph random_graph(int n, Rng& rng) {
  DepGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(image[i], image[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  return Permutation(std::move(image));
}

System sample_psi(const DepGraph& g, Rng& rng) {
  const int n = g.num_vertices();
  const DepGraph c = complement(g);
  std::vector<Anf> updates;
  for (int i = 1; i <= n; ++i)
    updates.push_back(random_anf(n, static_cast<std::uint32_t>(ball(c, i, 1)), rng));
  return System(std::move(updates));
}

}  // namespace fds
