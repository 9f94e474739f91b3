#include "fds/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fds/errors.hpp"

namespace fds {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

DepGraph::DepGraph(int n) : n_(n) {
  if (n < 1 || n > 64)
    throw DimensionError("graph must have 1..64 vertices, got " + std::to_string(n));
  adj_.assign(n, 0);
}

DepGraph::DepGraph(int n, std::span<const Edge> edges) : DepGraph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

DepGraph DepGraph::complete(int n) {
  DepGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  return g;
}

void DepGraph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw DimensionError("vertex " + std::to_string(v) + " not in 1.." +
                         std::to_string(n_));
}

void DepGraph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DimensionError("self-loop at vertex " + std::to_string(i));
  adj_[i - 1] |= bit(j);
  adj_[j - 1] |= bit(i);
}

void DepGraph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  adj_[i - 1] &= ~bit(j);
  adj_[j - 1] &= ~bit(i);
}

bool DepGraph::has_edge(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[i - 1] & bit(j)) != 0;
}

int DepGraph::degree(int i) const {
  check_vertex(i);
  return std::popcount(adj_[i - 1]);
}

std::size_t DepGraph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t row : adj_) total += std::popcount(row);
  return total / 2;
}

std::vector<Edge> DepGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (adj_[i - 1] & bit(j)) out.emplace_back(i, j);
  return out;
}

bool DepGraph::contains(const DepGraph& other) const {
  if (other.n_ != n_) return false;
  for (int i = 0; i < n_; ++i)
    if ((other.adj_[i] & ~adj_[i]) != 0) return false;
  return true;
}

bool BitMatrix::is_symmetric() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool BitMatrix::has_zero_diagonal() const {
  for (int i = 1; i <= n_; ++i)
    if (at(i, i)) return false;
  return true;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v])
      throw DimensionError("not a permutation of 1.." + std::to_string(n));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int k = 0; k < n; ++k) image[k] = k + 1;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int k = 1; k <= size(); ++k) inv[image_[k - 1] - 1] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& inner) const {
  if (inner.size() != size()) throw DimensionError("permutation size mismatch");
  std::vector<int> out(image_.size());
  for (int k = 1; k <= size(); ++k) out[k - 1] = (*this)(inner(k));
  return Permutation(std::move(out));
}

DepGraph complement(const DepGraph& g) {
  const int n = g.num_vertices();
  DepGraph out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!g.has_edge(i, j)) out.add_edge(i, j);
  return out;
}

BitMatrix adjacency(const DepGraph& g) {
  BitMatrix m(g.num_vertices());
  for (auto [i, j] : g.edges()) {
    m.set(i, j, true);
    m.set(j, i, true);
  }
  return m;
}

BitMatrix linearize(const DepGraph& g) { return adjacency(complement(g)); }

BitMatrix perm_act(const Permutation& p, const BitMatrix& m) {
  const int n = m.size();
  if (p.size() != n) throw DimensionError("permutation and matrix sizes differ");
  const Permutation inv = p.inverse();
  BitMatrix out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.set(i, j, m.at(inv(i), inv(j)));
  return out;
}

DepGraph relabel(const Permutation& p, const DepGraph& g) {
  if (p.size() != g.num_vertices())
    throw DimensionError("permutation and graph sizes differ");
  DepGraph out(g.num_vertices());
  for (auto [i, j] : g.edges()) out.add_edge(p(i), p(j));
  return out;
}

namespace {

struct IsoSearch {
  const DepGraph& a;
  const DepGraph& b;
  int n;
  std::vector<int> image;  // image[u-1] = p(u), 0 while unassigned
  std::uint64_t used = 0;

  // Assigns vertex u given that 1..u-1 are placed.
  bool extend(int u) {
    if (u > n) return true;
    for (int v = 1; v <= n; ++v) {
      if ((used >> (v - 1)) & 1u) continue;
      if (!fits(u, v)) continue;
      image[u - 1] = v;
      used |= std::uint64_t{1} << (v - 1);
      if (extend(u + 1)) return true;
      used &= ~(std::uint64_t{1} << (v - 1));
      image[u - 1] = 0;
    }
    return false;
  }

  bool fits(int u, int v) const {
    if (a.degree(u) != b.degree(v)) return false;
    for (int w = 1; w < u; ++w)
      if (a.has_edge(u, w) != b.has_edge(v, image[w - 1])) return false;
    return true;
  }
};

std::vector<int> sorted_degrees(const DepGraph& g) {
  std::vector<int> d;
  for (int v = 1; v <= g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<Permutation> find_graph_iso(const DepGraph& a, const DepGraph& b,
                                          const Limits& limits) {
  const int n = a.num_vertices();
  if (b.num_vertices() != n) return std::nullopt;
  if (n > limits.iso_max_n)
    throw BudgetError("isomorphism search limited to n <= " +
                      std::to_string(limits.iso_max_n) + ", got " + std::to_string(n));
  if (a.edge_count() != b.edge_count() || sorted_degrees(a) != sorted_degrees(b))
    return std::nullopt;

  // One independent search per image of vertex 1; the smallest successful
  // image wins, which is the lexicographically first permutation overall.
  std::vector<std::vector<int>> found(n);
#pragma omp parallel for schedule(dynamic) if (n >= 7)
  for (int first = 1; first <= n; ++first) {
    IsoSearch search{a, b, n, std::vector<int>(n, 0), 0};
    if (!search.fits(1, first)) continue;
    search.image[0] = first;
    search.used = std::uint64_t{1} << (first - 1);
    if (search.extend(2)) found[first - 1] = search.image;
  }
  for (const auto& image : found)
    if (!image.empty()) return Permutation(image);
  return std::nullopt;
}

std::uint64_t ball(const DepGraph& g, int v, int d) {
  std::uint64_t reached = std::uint64_t{1} << (v - 1);
  std::uint64_t frontier = reached;
  for (int step = 0; step < d && frontier; ++step) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= g.neighbors(std::countr_zero(f) + 1);
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

}  // namespace fds
