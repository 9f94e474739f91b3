#include "fds/schedules.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "fds/errors.hpp"
#include "fds/kernels.hpp"

namespace fds {

namespace {

bool may_swap(int a, int b, const DepGraph& g) { return a == b || !g.has_edge(a, b); }

std::vector<int> sorted_letters(const Word& w) {
  std::vector<int> v(w.letters().begin(), w.letters().end());
  std::sort(v.begin(), v.end());
  return v;
}

// BFS over adjacent swaps. Stops early once `target` is seen.
std::set<Word> closure(const Word& w, const DepGraph& g, const Limits& limits,
                       const Word* target) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    const Word cur = std::move(queue.front());
    queue.pop_front();
    if (target && cur == *target) break;
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (cur[k] == cur[k + 1] || !may_swap(cur[k], cur[k + 1], g)) continue;
      std::vector<int> next(cur.letters().begin(), cur.letters().end());
      std::swap(next[k], next[k + 1]);
      Word nw(std::move(next));
      if (seen.insert(nw).second) {
        if (seen.size() > limits.max_class)
          throw BudgetError("equivalence class exceeds " +
                            std::to_string(limits.max_class) + " words");
        queue.push_back(std::move(nw));
      }
    }
  }
  return seen;
}

BigInt word_count(int n, int t, bool perms) {
  BigInt count = 1;
  if (perms)
    for (int k = 2; k <= n; ++k) count *= k;
  else
    for (int k = 0; k < t; ++k) count *= n;
  return count;
}

std::uint64_t checked_word_count(int n, int t, bool perms, const Limits& limits) {
  const BigInt count = word_count(n, t, perms);
  if (count > limits.max_words) {
    std::ostringstream msg;
    msg << "enumeration needs " << count << " words; budget is " << limits.max_words;
    throw BudgetError(msg.str());
  }
  return static_cast<std::uint64_t>(count);
}

// The index-th word in lexicographic order.
std::vector<int> decode_word(std::uint64_t index, int n, int t, bool perms) {
  std::vector<int> w(t);
  if (!perms) {
    for (int k = t - 1; k >= 0; --k) {
      w[k] = static_cast<int>(index % n) + 1;
      index /= n;
    }
    return w;
  }
  std::vector<int> pool(n);
  for (int k = 0; k < n; ++k) pool[k] = k + 1;
  std::uint64_t fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t pick = index / fact;
    index %= fact;
    w[k] = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    if (n - 1 - k > 0) fact /= (n - 1 - k);
  }
  return w;
}

void advance_word(std::vector<int>& w, int n, bool perms) {
  if (perms) {
    std::next_permutation(w.begin(), w.end());
    return;
  }
  for (int k = static_cast<int>(w.size()) - 1; k >= 0; --k) {
    if (w[k] < n) {
      ++w[k];
      return;
    }
    w[k] = 1;
  }
}

struct MapEntry {
  Word first;
  Word first_form;
  std::optional<Word> second;  // first later word in another class
};

struct HEntry {
  std::uint64_t multiplicity = 0;
  DepGraph graph{1};
};

using MapTable = std::map<std::vector<State>, MapEntry>;

// Folds a later observation (first word `w`, its class form `form`, and
// optionally a later inequivalent witness) into an existing entry.
void fold(MapEntry& acc, const Word& w, const Word& form, const std::optional<Word>& second) {
  if (acc.second) return;
  if (form != acc.first_form)
    acc.second = w;
  else if (second)
    acc.second = second;
}

struct Chunk {
  std::uint64_t classes = 0;
  MapTable maps;
  std::set<std::string> oriented;
  std::map<std::string, HEntry> hs;
};

void finish(BoundReport& r, const MapTable& maps, const std::set<std::string>& oriented,
            const std::map<std::string, HEntry>& hs, std::size_t max_witnesses) {
  r.distinct = maps.size();
  r.realized = oriented.size();
  r.distinct_h = hs.size();

  std::vector<std::pair<Word, Word>> witnesses;
  for (const auto& [key, e] : maps)
    if (e.second) witnesses.emplace_back(e.first, *e.second);
  std::sort(witnesses.begin(), witnesses.end());
  r.witness_count = witnesses.size();
  if (witnesses.size() > max_witnesses) witnesses.resize(max_witnesses);
  r.witnesses = std::move(witnesses);

  std::vector<const HEntry*> entries;
  for (const auto& [key, e] : hs) entries.push_back(&e);
  std::vector<BigInt> counts(entries.size());
  const std::int64_t m = static_cast<std::int64_t>(entries.size());
#pragma omp parallel for schedule(dynamic) if (m >= 8)
  for (std::int64_t k = 0; k < m; ++k) counts[k] = count_acyclic_orientations(entries[k]->graph);
  r.paper_sum = 0;
  r.paper_sum_per_word = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    r.paper_sum += counts[k];
    r.paper_sum_per_word += counts[k] * entries[k]->multiplicity;
  }
}

std::vector<std::vector<State>> local_tables(const System& f) {
  std::vector<std::vector<State>> tables;
  for (int i = 1; i <= f.size(); ++i) {
    const auto m = local_map(f, i);
    tables.emplace_back(m.successors().begin(), m.successors().end());
  }
  return tables;
}

}  // namespace

bool words_equivalent(const Word& a, const Word& b, const DepGraph& g,
                      const Limits& limits) {
  if (a.size() != b.size()) return false;
  a.check(g.num_vertices());
  b.check(g.num_vertices());
  if (sorted_letters(a) != sorted_letters(b)) return false;
  return closure(a, g, limits, &b).count(b) != 0;
}

std::vector<Word> equivalence_class(const Word& w, const DepGraph& g,
                                    const Limits& limits) {
  w.check(g.num_vertices());
  const auto seen = closure(w, g, limits, nullptr);
  return {seen.begin(), seen.end()};
}

Word normal_form(const Word& w, const DepGraph& g) {
  w.check(g.num_vertices());
  std::vector<int> rest(w.letters().begin(), w.letters().end());
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    std::uint64_t met = 0;  // letters already passed; only first occurrences move
    for (std::size_t p = 0; p < rest.size(); ++p) {
      const int a = rest[p];
      const std::uint64_t bit = std::uint64_t{1} << (a - 1);
      if (!(met & bit)) {
        // a can reach the front iff every earlier letter differs and commutes.
        bool free = true;
        for (std::size_t q = 0; q < p && free; ++q) free = rest[q] != a && !g.has_edge(rest[q], a);
        if (free && (best == rest.size() || a < rest[best])) best = p;
      }
      met |= bit;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Word(std::move(out));
}

std::vector<OccurrenceVertex> OrientedHGraph::canonical_vertices() const {
  std::vector<OccurrenceVertex> v = vertices;
  std::sort(v.begin(), v.end());
  return v;
}

namespace {

std::size_t canonical_index(const std::vector<OccurrenceVertex>& canon,
                            const OccurrenceVertex& v) {
  return static_cast<std::size_t>(
      std::lower_bound(canon.begin(), canon.end(), v) - canon.begin());
}

}  // namespace

DepGraph OrientedHGraph::underlying() const {
  if (vertices.empty() || vertices.size() > 64)
    throw DimensionError("occurrence graph must have 1..64 vertices");
  const auto canon = canonical_vertices();
  DepGraph g(static_cast<int>(canon.size()));
  for (const Arc& a : arcs)
    g.add_edge(static_cast<int>(canonical_index(canon, a.from)) + 1,
               static_cast<int>(canonical_index(canon, a.to)) + 1);
  return g;
}

bool OrientedHGraph::is_acyclic() const {
  const auto canon = canonical_vertices();
  std::vector<std::vector<std::size_t>> out(canon.size());
  std::vector<std::size_t> indeg(canon.size(), 0);
  for (const Arc& a : arcs) {
    out[canonical_index(canon, a.from)].push_back(canonical_index(canon, a.to));
    ++indeg[canonical_index(canon, a.to)];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < canon.size(); ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t u : out[v])
      if (--indeg[u] == 0) ready.push_back(u);
  }
  return removed == canon.size();
}

std::string OrientedHGraph::graph_key() const {
  const auto canon = canonical_vertices();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const Arc& a : arcs) {
    auto x = canonical_index(canon, a.from), y = canonical_index(canon, a.to);
    edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(edges.begin(), edges.end());
  std::string key;
  for (const auto& v : canon) {
    key += static_cast<char>(v.letter);
    key += static_cast<char>(v.occurrence);
  }
  key += '|';
  for (auto [x, y] : edges) {
    key += static_cast<char>(x);
    key += static_cast<char>(y);
  }
  return key;
}

std::string OrientedHGraph::oriented_key() const {
  const auto canon = canonical_vertices();
  std::vector<std::pair<std::size_t, std::size_t>> directed;
  for (const Arc& a : arcs)
    directed.emplace_back(canonical_index(canon, a.from), canonical_index(canon, a.to));
  std::sort(directed.begin(), directed.end());
  std::string key;
  for (const auto& v : canon) {
    key += static_cast<char>(v.letter);
    key += static_cast<char>(v.occurrence);
  }
  key += '|';
  for (auto [x, y] : directed) {
    key += static_cast<char>(x);
    key += static_cast<char>(y);
  }
  return key;
}

OrientedHGraph h_graph(const Word& w, const DepGraph& g) {
  w.check(g.num_vertices());
  OrientedHGraph h;
  std::vector<int> seen(g.num_vertices() + 1, 0);
  for (int letter : w.letters()) h.vertices.push_back({letter, ++seen[letter]});
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] != w[b] && !g.has_edge(w[a], w[b]))
        h.arcs.push_back({h.vertices[b], h.vertices[a]});
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

BoundReport bound_report(const System& f, const BoundOptions& options,
                         const Limits& limits) {
  const int n = f.size();
  const bool perms = options.permutations_only;
  const int t = perms ? n : options.length;
  if (t < 1) throw DimensionError("word length must be at least 1");
  const std::uint64_t total = checked_word_count(n, t, perms, limits);

  const DepGraph gbar = complement(phi(f));
  const DepGraph g = phi(f);
  const auto tables = local_tables(f);
  const std::size_t states = std::size_t{1} << n;

  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 256);
  std::vector<Chunk> chunks(chunk_count);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
    const std::uint64_t begin = total * c / chunk_count;
    const std::uint64_t end = total * (c + 1) / chunk_count;
    Chunk& out = chunks[c];
    std::vector<int> letters = decode_word(begin, n, t, perms);
    std::vector<State> image(states);
    for (std::uint64_t idx = begin; idx < end; ++idx, advance_word(letters, n, perms)) {
      const Word w(letters);
      for (std::size_t s = 0; s < states; ++s) {
        State x = static_cast<State>(s);
        for (int l : letters) x = tables[l - 1][x];
        image[s] = x;
      }
      const Word form = normal_form(w, gbar);
      if (form == w) ++out.classes;

      auto [it, inserted] = out.maps.try_emplace(image, MapEntry{w, form, std::nullopt});
      if (!inserted) fold(it->second, w, form, std::nullopt);

      const OrientedHGraph h = h_graph(w, g);
      out.oriented.insert(h.oriented_key());
      auto [hit, fresh] = out.hs.try_emplace(h.graph_key());
      if (fresh) hit->second.graph = h.underlying();
      ++hit->second.multiplicity;
    }
  }

  BoundReport r;
  r.n = n;
  r.length = t;
  r.permutations_only = perms;
  r.words = total;
  MapTable maps;
  std::set<std::string> oriented;
  std::map<std::string, HEntry> hs;
  for (Chunk& c : chunks) {
    r.classes += c.classes;
    for (auto& [key, e] : c.maps) {
      auto [it, inserted] = maps.try_emplace(key, e);
      if (!inserted) fold(it->second, e.first, e.first_form, e.second);
    }
    oriented.merge(c.oriented);
    for (auto& [key, e] : c.hs) {
      auto [it, inserted] = hs.try_emplace(key, e);
      if (!inserted) it->second.multiplicity += e.multiplicity;
    }
  }
  finish(r, maps, oriented, hs, options.max_witnesses);
  return r;
}

std::vector<Word> class_representatives(int n, int t, const DepGraph& g,
                                        const Limits& limits) {
  if (g.num_vertices() != n) throw DimensionError("graph size differs from alphabet size");
  if (t < 1) throw DimensionError("word length must be at least 1");
  const std::uint64_t total = checked_word_count(n, t, false, limits);
  std::vector<Word> reps;
  std::vector<int> letters = decode_word(0, n, t, false);
  for (std::uint64_t idx = 0; idx < total; ++idx, advance_word(letters, n, false)) {
    Word w(letters);
    if (normal_form(w, g) == w) reps.push_back(std::move(w));
  }
  return reps;
}

namespace reference {

BoundReport bound_report(const System& f, const BoundOptions& options,
                         const Limits& limits) {
  const int n = f.size();
  const bool perms = options.permutations_only;
  const int t = perms ? n : options.length;
  if (t < 1) throw DimensionError("word length must be at least 1");
  const std::uint64_t total = checked_word_count(n, t, perms, limits);
  const DepGraph g = phi(f);
  const DepGraph gbar = complement(g);

  std::vector<Word> words;
  std::vector<int> letters = decode_word(0, n, t, perms);
  for (std::uint64_t idx = 0; idx < total; ++idx, advance_word(letters, n, perms))
    words.emplace_back(letters);

  BoundReport r;
  r.n = n;
  r.length = t;
  r.permutations_only = perms;
  r.words = total;
  std::set<Word> forms;
  MapTable maps;
  std::set<std::string> oriented;
  std::map<std::string, HEntry> hs;
  for (const Word& w : words) {
    const Word form = normal_form(w, gbar);
    forms.insert(form);
    auto image = fds::reference::compose_pointwise(n, f.updates(), w.letters());
    auto [it, inserted] = maps.try_emplace(std::move(image), MapEntry{w, form, std::nullopt});
    if (!inserted) fold(it->second, w, form, std::nullopt);
    const OrientedHGraph h = h_graph(w, g);
    oriented.insert(h.oriented_key());
    auto [hit, fresh] = hs.try_emplace(h.graph_key());
    if (fresh) hit->second.graph = h.underlying();
    ++hit->second.multiplicity;
  }
  r.classes = forms.size();
  finish(r, maps, oriented, hs, options.max_witnesses);
  return r;
}

}  // namespace reference

}  // namespace fds
