#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fds/limits.hpp"

namespace fds {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n (n <= 64).
class DepGraph {
 public:
  explicit DepGraph(int n);
  DepGraph(int n, std::span<const Edge> edges);

  static DepGraph complete(int n);

  int num_vertices() const { return n_; }
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  bool has_edge(int i, int j) const;
  /// Bit j-1 set iff (i,j) is an edge.
  std::uint64_t neighbors(int i) const { return adj_[i - 1]; }
  int degree(int i) const;
  std::size_t edge_count() const;
  /// Sorted, each pair with first < second.
  std::vector<Edge> edges() const;

  /// Every edge of other is an edge of *this.
  bool contains(const DepGraph& other) const;

  bool operator==(const DepGraph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_;
  std::vector<std::uint64_t> adj_;
};

/// Square matrix over {0,1}, indexed 1..n in both coordinates.
class BitMatrix {
 public:
  explicit BitMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool at(int i, int j) const { return cells_[index(i, j)] != 0; }
  void set(int i, int j, bool v) { cells_[index(i, j)] = v ? 1 : 0; }

  bool is_symmetric() const;
  bool has_zero_diagonal() const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }

  int n_;
  std::vector<std::uint8_t> cells_;
};

/// Bijection of 1..n in one-line notation: image[k-1] = p(k).
class Permutation {
 public:
  /// Throws DimensionError unless image is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[k - 1]; }
  std::span<const int> image() const { return image_; }

  Permutation inverse() const;
  /// (*this o inner)(k) = (*this)(inner(k)).
  Permutation after(const Permutation& inner) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

DepGraph complement(const DepGraph& g);
BitMatrix adjacency(const DepGraph& g);

/// The linearization matrix: adjacency of the complement, zero diagonal.
BitMatrix linearize(const DepGraph& g);

/// (p M)_{ij} = M_{p^-1(i), p^-1(j)}.
BitMatrix perm_act(const Permutation& p, const BitMatrix& m);

/// Image graph: (i,j) becomes (p(i), p(j)).
DepGraph relabel(const Permutation& p, const DepGraph& g);

/// Lexicographically first p with relabel(p, a) == b, or nullopt.
/// Backtracking over S_n with degree pruning; throws BudgetError above
/// limits.iso_max_n. The first vertex's candidates are tried in parallel.
std::optional<Permutation> find_graph_iso(const DepGraph& a, const DepGraph& b,
                                          const Limits& limits = {});

/// Closed ball of radius d around v (bit u-1 set for every vertex within
/// distance d).
std::uint64_t ball(const DepGraph& g, int v, int d);

}  // namespace fds
