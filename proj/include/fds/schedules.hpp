#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fds/graph.hpp"
#include "fds/limits.hpp"
#include "fds/system.hpp"

namespace fds {

using BigInt = boost::multiprecision::cpp_int;

// Word equivalence ~_G: adjacent letters may be swapped when they are equal
// or non-adjacent in G.

/// Decided by breadth-first closure from a. Words of different length are
/// never equivalent. Throws BudgetError when the class outgrows
/// limits.max_class before b is reached.
bool words_equivalent(const Word& a, const Word& b, const DepGraph& g,
                      const Limits& limits = {});

/// Every word ~_G-equivalent to w, sorted. Throws BudgetError past max_class.
std::vector<Word> equivalence_class(const Word& w, const DepGraph& g,
                                    const Limits& limits = {});

/// Lexicographically least word of the class of w (numeric letter order).
/// Built greedily: repeatedly emit the smallest letter that can be commuted
/// to the front of what remains.
Word normal_form(const Word& w, const DepGraph& g);

/// A word position named by its letter and which occurrence of that letter it
/// is (1-based).
struct OccurrenceVertex {
  int letter = 0;
  int occurrence = 0;
  auto operator<=>(const OccurrenceVertex&) const = default;
};

struct Arc {
  OccurrenceVertex from;
  OccurrenceVertex to;
  auto operator<=>(const Arc&) const = default;
};

/// Occurrence graph of a word: one vertex per position, an edge between two
/// positions carrying distinct letters that are not adjacent in G, each edge
/// directed toward the position that comes first in the word.
struct OrientedHGraph {
  std::vector<OccurrenceVertex> vertices;  // in word order
  std::vector<Arc> arcs;                   // sorted

  /// Vertices in canonical (letter, occurrence) order.
  std::vector<OccurrenceVertex> canonical_vertices() const;
  /// Undirected graph on canonical vertex indices 1..t.
  DepGraph underlying() const;
  bool is_acyclic() const;

  /// Byte strings identifying H alone and the pair (H, orientation).
  std::string graph_key() const;
  std::string oriented_key() const;
};

OrientedHGraph h_graph(const Word& w, const DepGraph& g);

/// Number of acyclic orientations, by deletion-contraction with memoization
/// and splitting into connected components.
BigInt count_acyclic_orientations(const DepGraph& h);

struct BoundOptions {
  int length = 1;             // ignored when permutations_only
  bool permutations_only = false;
  std::size_t max_witnesses = 16;
};

/// Distinct composed systems over all words of one length, against the
/// counting chain: distinct <= classes = realized.
struct BoundReport {
  int n = 0;
  int length = 0;
  bool permutations_only = false;
  std::uint64_t words = 0;
  std::uint64_t distinct = 0;   // distinct maps f^w
  std::uint64_t classes = 0;    // classes of words under ~ with the complement of phi(f)
  std::uint64_t realized = 0;   // distinct (H_w, O_w) pairs
  std::uint64_t distinct_h = 0; // distinct H_w
  BigInt paper_sum = 0;           // sum of |Acyc(H)| over distinct H_w
  BigInt paper_sum_per_word = 0;  // sum of |Acyc(H_w)| over every word w
  /// Pairs of inequivalent words with equal composed maps, one per colliding
  /// map (its two lexicographically first representatives from distinct
  /// classes), ordered by the first word; at most max_witnesses are kept.
  std::vector<std::pair<Word, Word>> witnesses;
  std::uint64_t witness_count = 0;

  bool operator==(const BoundReport&) const = default;
};

/// Words enumerated: all of length `length`, or all permutations of 1..n.
/// Throws BudgetError (with the required word count) above limits.max_words.
/// Runs the word range in parallel chunks merged in order.
BoundReport bound_report(const System& f, const BoundOptions& options,
                         const Limits& limits = {});

/// Normal forms of every ~_G class of words of length t over 1..n, sorted.
std::vector<Word> class_representatives(int n, int t, const DepGraph& g,
                                        const Limits& limits = {});

namespace reference {

/// Straightforward single-threaded bound_report: materializes every word,
/// counts classes as distinct normal forms.
BoundReport bound_report(const System& f, const BoundOptions& options,
                         const Limits& limits = {});

}  // namespace reference

}  // namespace fds
