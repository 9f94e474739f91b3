#include "fds/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "fds/errors.hpp"

namespace fds {

Limits Limits::from_env() {
  Limits limits;
  if (const char* env = std::getenv("FDS_MAX_N"); env && *env) {
    int value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value < 1)
      throw ParseError("FDS_MAX_N must be a positive integer");
    if (value > kHardMaxVars)
      throw BudgetError("FDS_MAX_N=" + std::to_string(value) + " exceeds the hard limit " +
                        std::to_string(kHardMaxVars));
    limits.max_vars = value;
  }
  return limits;
}

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

int parse_int(std::string_view s, const std::string& what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected an integer for " + what + ", got '" + std::string(s) + "'");
  return value;
}

// Non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  for (std::string_view line : split(text, '\n')) {
    ++number;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(number, t);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "key: value" with the expected key.
std::string_view header_value(std::string_view line, std::string_view key, int number) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos || trim(line.substr(0, colon)) != key)
    throw ParseError("line " + std::to_string(number) + ": expected '" + std::string(key) +
                     ": ...'");
  return trim(line.substr(colon + 1));
}

}  // namespace

Anf parse_anf(std::string_view text, int n) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Monomial> terms;
  for (std::string_view term : split(s, '+')) {
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    if (term == "0") continue;
    if (term == "1") {
      terms.push_back(Monomial::one());
      continue;
    }
    std::uint32_t mask = 0;
    for (std::string_view factor : split(term, '*')) {
      if (factor.size() < 2 || factor.front() != 'x')
        throw ParseError("bad factor '" + std::string(factor) + "' in '" + s + "'");
      const int k = parse_int(factor.substr(1), "variable index");
      if (k < 1 || k > n)
        throw ParseError("variable x" + std::to_string(k) + " not in x1..x" + std::to_string(n));
      mask |= std::uint32_t{1} << (k - 1);
    }
    terms.emplace_back(mask);
  }
  return Anf(n, std::move(terms));
}

std::string format_anf(const Anf& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (Monomial m : graded_basis(p.num_vars())) {
    if (!std::binary_search(p.terms().begin(), p.terms().end(), m)) continue;
    if (!out.empty()) out += " + ";
    if (m.mask() == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (int k = 1; k <= p.num_vars(); ++k) {
      if (!m.contains(k)) continue;
      if (!first) out += '*';
      out += 'x' + std::to_string(k);
      first = false;
    }
  }
  return out;
}

System parse_system(std::string_view text, const Limits& limits) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("system file is empty");
  const auto [first_no, first] = lines.front();
  const int n = parse_int(header_value(first, "vars", first_no), "vars");
  if (n < 1) throw ParseError("vars must be positive");
  if (n > limits.max_vars)
    throw BudgetError("system dimension " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(limits.max_vars));

  std::vector<std::optional<Anf>> updates(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [no, line] = lines[k];
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(no) + ": ";
    if (eq == std::string_view::npos) throw ParseError(where + "expected 'f<i> = <polynomial>'");
    const std::string_view lhs = trim(line.substr(0, eq));
    if (lhs.size() < 2 || lhs.front() != 'f') throw ParseError(where + "expected f<i> on the left");
    const int i = parse_int(lhs.substr(1), "coordinate");
    if (i < 1 || i > n) throw ParseError(where + "coordinate " + std::to_string(i) + " not in 1.." + std::to_string(n));
    if (updates[i - 1]) throw ParseError(where + "f" + std::to_string(i) + " defined twice");
    try {
      updates[i - 1] = parse_anf(line.substr(eq + 1), n);
    } catch (const ParseError& e) {
      throw ParseError(where + e.what());
    }
  }
  std::vector<Anf> out;
  for (int i = 1; i <= n; ++i) {
    if (!updates[i - 1]) throw ParseError("missing f" + std::to_string(i));
    out.push_back(*updates[i - 1]);
  }
  return System(std::move(out));
}

std::string format_system(const System& f) {
  std::string out = "vars: " + std::to_string(f.size()) + "\n";
  for (int i = 1; i <= f.size(); ++i)
    out += "f" + std::to_string(i) + " = " + format_anf(f.update(i)) + "\n";
  return out;
}

System load_system(const std::string& path, const Limits& limits) {
  return parse_system(read_file(path), limits);
}

DepGraph parse_graph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("graph file is empty");
  const auto [first_no, first] = lines.front();
  const int n = parse_int(header_value(first, "vertices", first_no), "vertices");
  if (n < 1 || n > 64) throw ParseError("vertices must be in 1..64");
  DepGraph g(n);
  if (lines.size() < 2) return g;

  std::string body(header_value(lines[1].second, "edges", lines[1].first));
  for (std::size_t k = 2; k < lines.size(); ++k) body += std::string(lines[k].second);
  const std::string s = strip(body);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in edge list '" + s + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated edge in '" + s + "'");
    const auto parts = split(std::string_view(s).substr(pos + 1, close - pos - 1), ',');
    if (parts.size() != 2) throw ParseError("edge must have two endpoints");
    const int i = parse_int(parts[0], "edge endpoint");
    const int j = parse_int(parts[1], "edge endpoint");
    if (i < 1 || i > n || j < 1 || j > n || i == j)
      throw ParseError("invalid edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    g.add_edge(i, j);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ',') throw ParseError("expected ',' between edges");
      ++pos;
      if (pos == s.size()) throw ParseError("trailing ',' in edge list");
    }
  }
  return g;
}

std::string format_graph(const DepGraph& g) {
  std::string out = "vertices: " + std::to_string(g.num_vertices()) + "\nedges:";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    out += first ? " " : ", ";
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    first = false;
  }
  return out + "\n";
}

DepGraph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Word parse_word(std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty word");
  std::vector<int> letters;
  for (std::string_view part : split(s, ',')) letters.push_back(parse_int(part, "word letter"));
  return Word(std::move(letters));
}

Permutation parse_permutation(std::string_view text) {
  const Word w = parse_word(text);
  try {
    return Permutation(std::vector<int>(w.letters().begin(), w.letters().end()));
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

Json to_json(const DepGraph& g) {
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i, j});
  return Json{{"n", g.num_vertices()}, {"edges", edges}};
}

Json to_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(m.at(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Word& w) { return Json(std::vector<int>(w.letters().begin(), w.letters().end())); }

Json to_json(const Permutation& p) {
  return Json(std::vector<int>(p.image().begin(), p.image().end()));
}

Json to_json(const LimitCycles& lc, int n) {
  Json cycles = Json::array();
  for (const auto& c : lc.cycles) {
    Json cycle = Json::array();
    for (State s : c) cycle.push_back(state_label(s, n));
    cycles.push_back(cycle);
  }
  return Json{{"multiset", lc.multiset()}, {"cycles", cycles}};
}

Json to_json(const TransitionMap& m) {
  Json next = Json::array();
  for (State s : m.successors()) next.push_back(state_label(s, m.num_vars()));
  return Json{{"n", m.num_vars()}, {"successors", next}};
}

Json to_json(const OrientedHGraph& h) {
  Json vertices = Json::array();
  for (const auto& v : h.vertices) vertices.push_back({v.letter, v.occurrence});
  Json arcs = Json::array();
  for (const auto& a : h.arcs)
    arcs.push_back(Json{{"from", {a.from.letter, a.from.occurrence}},
                        {"to", {a.to.letter, a.to.occurrence}}});
  return Json{{"vertices", vertices}, {"arcs", arcs}, {"acyclic", h.is_acyclic()}};
}

Json to_json(const BoundReport& r) {
  Json witnesses = Json::array();
  for (const auto& [a, b] : r.witnesses) witnesses.push_back({to_json(a), to_json(b)});
  return Json{{"n", r.n},
              {"t", r.length},
              {"permutations_only", r.permutations_only},
              {"words", r.words},
              {"distinct", r.distinct},
              {"classes", r.classes},
              {"realized", r.realized},
              {"distinct_h", r.distinct_h},
              {"paper_sum", to_json(r.paper_sum)},
              {"paper_sum_per_word", to_json(r.paper_sum_per_word)},
              {"chain_holds", r.distinct <= r.classes && r.classes == r.realized},
              {"strict", r.distinct < r.classes},
              {"witness_count", r.witness_count},
              {"witnesses", witnesses}};
}

}  // namespace fds
