#pragma once

// Text formats and JSON views.
//
//   polynomial   sum of terms joined by '+'; a term is 1 or x<k>*x<l>*...;
//                0 is the zero polynomial; whitespace is ignored; repeated
//                terms cancel.
//   .fds file    "vars: <n>", then "f<i> = <polynomial>" once for each i.
//   graph file   "vertices: <n>", then "edges: (i,j), (k,l), ..." (may be
//                empty).
//   Lines whose first non-blank character is '#' are comments in both files.

#include <string>
#include <string_view>

#include <json.hpp>

#include "fds/anf.hpp"
#include "fds/dynamics.hpp"
#include "fds/graph.hpp"
#include "fds/limits.hpp"
#include "fds/schedules.hpp"
#include "fds/system.hpp"

namespace fds {

using Json = nlohmann::ordered_json;

Anf parse_anf(std::string_view text, int n);
/// Terms in graded order, e.g. "1 + x3 + x1*x2"; "0" for zero.
std::string format_anf(const Anf& p);

System parse_system(std::string_view text, const Limits& limits = {});
std::string format_system(const System& f);
System load_system(const std::string& path, const Limits& limits = {});

DepGraph parse_graph(std::string_view text);
std::string format_graph(const DepGraph& g);
DepGraph load_graph(const std::string& path);

/// Comma-separated letters, e.g. "1,2,3".
Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);

/// A number when it fits in 64 bits, otherwise its decimal string.
Json to_json(const BigInt& v);
Json to_json(const DepGraph& g);
Json to_json(const BitMatrix& m);
Json to_json(const Word& w);
Json to_json(const Permutation& p);
Json to_json(const LimitCycles& lc, int n);
Json to_json(const TransitionMap& m);
Json to_json(const OrientedHGraph& h);
Json to_json(const BoundReport& r);

}  // namespace fds
