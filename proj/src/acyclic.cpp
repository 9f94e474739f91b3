// Acyclic orientation counting by deletion-contraction:
//   a(G) = a(G - e) + a(G / e),
// where G / e merges the endpoints of e and collapses parallel edges.

#include <bit>
#include <map>

#include "fds/schedules.hpp"

namespace fds {

namespace {

using Rows = std::vector<std::uint64_t>;

// Drops vertices without neighbors and renumbers the rest in order.
Rows compact(const Rows& rows) {
  std::vector<int> index(rows.size(), -1);
  int kept = 0;
  for (std::size_t v = 0; v < rows.size(); ++v)
    if (rows[v]) index[v] = kept++;
  Rows out(kept, 0);
  for (std::size_t v = 0; v < rows.size(); ++v) {
    if (index[v] < 0) continue;
    std::uint64_t r = 0;
    for (std::uint64_t m = rows[v]; m; m &= m - 1)
      r |= std::uint64_t{1} << index[std::countr_zero(m)];
    out[index[v]] = r;
  }
  return out;
}

// Vertex set of the component containing v.
std::uint64_t component(const Rows& rows, int v) {
  std::uint64_t seen = std::uint64_t{1} << v, frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

Rows restrict(const Rows& rows, std::uint64_t vertices) {
  Rows out(rows.size(), 0);
  for (std::uint64_t m = vertices; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    out[v] = rows[v] & vertices;
  }
  return compact(out);
}

class Counter {
 public:
  BigInt count(const Rows& input) {
    Rows rows = compact(input);
    if (rows.empty()) return 1;

    const std::uint64_t first = component(rows, 0);
    const std::uint64_t all =
        rows.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows.size()) - 1;
    if (first != all) return count(restrict(rows, first)) * count(restrict(rows, all & ~first));
    return connected(rows);
  }

 private:
  BigInt connected(const Rows& rows) {
    const std::size_t k = rows.size();
    std::size_t degree_sum = 0;
    for (std::uint64_t r : rows) degree_sum += std::popcount(r);
    const std::size_t edges = degree_sum / 2;
    if (edges == k - 1) return BigInt{1} << edges;  // tree
    if (edges == k * (k - 1) / 2) {                 // complete: k!
      BigInt f = 1;
      for (std::size_t i = 2; i <= k; ++i) f *= i;
      return f;
    }
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;

    // Split on an edge at a vertex of minimum degree.
    int u = 0;
    for (std::size_t v = 1; v < k; ++v)
      if (std::popcount(rows[v]) < std::popcount(rows[u])) u = static_cast<int>(v);
    const int w = std::countr_zero(rows[u]);
    const std::uint64_t bu = std::uint64_t{1} << u, bw = std::uint64_t{1} << w;

    Rows deleted = rows;
    deleted[u] &= ~bw;
    deleted[w] &= ~bu;

    Rows contracted = rows;
    contracted[u] = (rows[u] | rows[w]) & ~(bu | bw);
    contracted[w] = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if (static_cast<int>(v) == u || static_cast<int>(v) == w) continue;
      if (contracted[v] & bw) contracted[v] = (contracted[v] & ~bw) | bu;
    }

    BigInt result = count(deleted) + count(contracted);
    memo_.emplace(rows, result);
    return result;
  }

  std::map<Rows, BigInt> memo_;
};

}  // namespace

BigInt count_acyclic_orientations(const DepGraph& h) {
  Rows rows(h.num_vertices());
  for (int v = 1; v <= h.num_vertices(); ++v) rows[v - 1] = h.neighbors(v);
  return Counter{}.count(rows);
}

}  // namespace fds
