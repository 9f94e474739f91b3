#include "fds/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fds/depgraph.hpp"
#include "fds/dynamics.hpp"
#include "fds/errors.hpp"
#include "fds/io.hpp"
#include "fds/kernels.hpp"
#include "fds/sampling.hpp"
#include "fds/schedules.hpp"

namespace fds::cli {

namespace {

struct RunConfig {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
  Limits limits;

  std::vector<std::string> files;
  std::string graph_path;
  std::string word;
  std::string other_word;
  std::string conjugate;
  std::string dot_path;
  int n = 0;
  int length = 0;
  int radius = 0;
  std::size_t sample = 0;
  std::size_t max_witnesses = 16;
  bool oracle = false;
  bool matrix = false;
  bool perms = false;
  bool explain = false;
};

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::budget: return "budget";
    case ErrorKind::io: return "io";
  }
  return "error";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return kParseError;
    case ErrorKind::dimension: return kDimensionError;
    case ErrorKind::budget: return kBudgetError;
    case ErrorKind::io: return kIoError;
  }
  return kParseError;
}

void emit_error(std::ostream& err, const char* kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

Json psi_cardinality_json(const PsiCardinality& c) {
  Json j{{"log2", c.log2}};
  // Decimal expansion only while it stays printable.
  if (c.log2 <= 4096)
    j["value"] = to_json(c.value());
  else
    j["value"] = nullptr;
  return j;
}

const char* const kHGraphNote =
    "H joins two word positions when their letters differ and are not adjacent in "
    "the reference graph, and each edge points at the earlier position. For the "
    "4-cycle (1,2),(2,3),(3,4),(4,1) and word 1,2,1,3 this gives two edges, "
    "3 -> 1 and 3 -> 1#2 (both letter pairs are {1,3}); a one-edge description of "
    "that example ('an edge 3 -> 1') names only the first of them.";

const char* const kBoundNote =
    "classes counts words up to swaps of adjacent letters that are equal or "
    "independent (an edge of the dependency graph phi(f)); realized counts distinct "
    "(H, orientation) pairs and always equals classes. paper_sum adds |Acyc(H)| once "
    "per distinct occurrence graph H; paper_sum_per_word adds it once per word. Both "
    "readings of the summed bound are reported.";

class Runner {
 public:
  Runner(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

  void deps() {
    const System f = system(0);
    const DepGraph g = phi(f);
    if (cfg_.format == "dot") {
      out_ << dep_dot_export(g);
      return;
    }
    if (cfg_.format == "text") {
      out_ << format_graph(g);
      return;
    }
    Json j = to_json(g);
    if (cfg_.matrix) {
      Json rows = Json::array();
      for (int i = 1; i <= f.size(); ++i) rows.push_back(coefficient_row(f.update(i)));
      j["matrix"] = rows;
    }
    if (cfg_.oracle) {
      const DepGraph o = phi_oracle(f, cfg_.limits);
      j["oracle"] = to_json(o);
      j["oracle_agrees"] = (o == g);
    }
    print(j);
  }

  void linearize_cmd() {
    DepGraph g = cfg_.graph_path.empty() ? phi(system(0)) : load_graph(cfg_.graph_path);
    const BitMatrix m = linearize(g);
    const System l = linear_system(m);
    if (cfg_.format == "text") {
      out_ << format_system(l);
      return;
    }
    Json updates = Json::array();
    for (int i = 1; i <= l.size(); ++i) updates.push_back(format_anf(l.update(i)));
    print(Json{{"graph", to_json(g)},
               {"matrix", to_json(m)},
               {"system", updates},
               {"phi_matches", phi(l) == g}});
  }

  void equiv() {
    const System f = system(0), g = system(1);
    const auto p = graph_equivalent(f, g, cfg_.limits);
    Json j{{"equivalent", p.has_value()},
           {"permutation", p ? to_json(*p) : Json(nullptr)},
           {"phi1", to_json(phi(f))},
           {"phi2", to_json(phi(g))}};
    if (p) {
      j["linearization1"] = to_json(linearize(phi(f)));
      j["linearization2"] = to_json(linearize(phi(g)));
    }
    print(j);
  }

  void compose() {
    const System f = system(0);
    const Word w = word();
    const TransitionMap m = compose_word(f, w);
    if (cfg_.format == "text") {
      for (std::size_t s = 0; s < m.size(); ++s)
        out_ << state_label(static_cast<State>(s), f.size()) << " -> "
             << state_label(m(static_cast<State>(s)), f.size()) << '\n';
      return;
    }
    Json j = to_json(m);
    j["word"] = to_json(w);
    print(j);
  }

  void statespace() {
    const System f = system(0);
    const StateSpace ss = state_space(compose_word(f, word()));
    if (!cfg_.dot_path.empty()) {
      std::ofstream dot(cfg_.dot_path);
      if (!dot) throw IoError("cannot write " + cfg_.dot_path);
      dot << dot_export(ss, cfg_.limits);
    }
    if (cfg_.format == "dot") {
      out_ << dot_export(ss, cfg_.limits);
      return;
    }
    Json next = Json::array();
    for (State s : ss.successor) next.push_back(state_label(s, ss.n));
    print(Json{{"n", ss.n},
               {"word", to_json(word())},
               {"successors", next},
               {"transients", transient_lengths(ss)},
               {"limit_cycles", to_json(limit_cycles(ss), ss.n)}});
  }

  void cycles() {
    const System f = system(0);
    const StateSpace ss = state_space(compose_word(f, word()));
    const LimitCycles lc = limit_cycles(ss);
    if (cfg_.format == "text") {
      for (const auto& c : lc.cycles) {
        out_ << c.size() << ':';
        for (State s : c) out_ << ' ' << state_label(s, ss.n);
        out_ << '\n';
      }
      return;
    }
    print(to_json(lc, ss.n));
  }

  void stable() {
    const System f = system(0), g = system(1);
    const Word w = word();
    const TransitionMap fm = compose_word(f, w), gm = compose_word(g, w);
    print(Json{{"stably_isomorphic", stably_isomorphic(fm, gm)},
               {"multiset1", limit_cycles(state_space(fm)).multiset()},
               {"multiset2", limit_cycles(state_space(gm)).multiset()},
               {"phi_equal", phi(f) == phi(g)}});
  }

  void bound() {
    const System f = system(0);
    BoundOptions options;
    options.length = cfg_.length;
    options.permutations_only = cfg_.perms;
    options.max_witnesses = cfg_.max_witnesses;
    if (!cfg_.perms && cfg_.length < 1) throw ParseError("bound needs -t <length> or --perms");
    const BoundReport r = bound_report(f, options, cfg_.limits);
    Json j = to_json(r);
    j["phi"] = to_json(phi(f));
    if (cfg_.perms)
      j["acyc_complement"] = to_json(count_acyclic_orientations(complement(phi(f))));
    if (cfg_.explain) j["notes"] = Json::array({kBoundNote});
    print(j);
  }

  void words() {
    const DepGraph g = graph();
    if (!cfg_.word.empty()) {
      const Word w = word();
      Json j{{"word", to_json(w)}, {"normal_form", to_json(normal_form(w, g))}};
      const auto cls = equivalence_class(w, g, cfg_.limits);
      j["class_size"] = cls.size();
      if (!cfg_.other_word.empty()) {
        const Word other = parse_word(cfg_.other_word);
        j["other"] = to_json(other);
        j["equivalent"] = words_equivalent(w, other, g, cfg_.limits);
      }
      print(j);
      return;
    }
    if (cfg_.n != g.num_vertices())
      throw DimensionError("-n " + std::to_string(cfg_.n) + " but the graph has " +
                           std::to_string(g.num_vertices()) + " vertices");
    const auto reps = class_representatives(cfg_.n, cfg_.length, g, cfg_.limits);
    Json forms = Json::array();
    for (const Word& w : reps) forms.push_back(to_json(w));
    print(Json{{"n", cfg_.n}, {"t", cfg_.length}, {"classes", reps.size()}, {"normal_forms", forms}});
  }

  void hgraph() {
    const DepGraph g = graph();
    const OrientedHGraph h = h_graph(word(), g);
    Json j = to_json(h);
    j["word"] = to_json(word());
    j["acyclic_orientations"] = to_json(count_acyclic_orientations(h.underlying()));
    if (cfg_.explain) j["notes"] = Json::array({kHGraphNote});
    print(j);
  }

  void psi() {
    const DepGraph g = graph();
    Json j{{"graph", to_json(g)}};
    if (!cfg_.files.empty()) j["member"] = psi_membership(system(0), g);
    if (cfg_.sample > 0) {
      Rng rng(cfg_.seed);
      Json samples = Json::array();
      bool all_contain = true;
      for (std::size_t k = 0; k < cfg_.sample; ++k) {
        const System s = sample_psi(g, rng);
        const bool ok = phi(s).contains(g);
        all_contain = all_contain && ok;
        samples.push_back(Json{{"system", format_system(s)}, {"phi_contains_graph", ok}});
      }
      j["seed"] = cfg_.seed;
      j["samples"] = samples;
      j["all_contain"] = all_contain;
    }
    print(j);
  }

  void psi_size() {
    const DepGraph g = graph();
    print(Json{{"graph", to_json(g)}, {"cardinality", psi_cardinality_json(psi_cardinality(g))}});
  }

  void dlocal() {
    const System f = system(0);
    const DepGraph y = graph();
    print(Json{{"d", cfg_.radius}, {"d_local", is_d_local(f, y, cfg_.radius)}});
  }

  void monoid() {
    const System f = system(0);
    const MonoidClosure closure = monoid_closure(f, cfg_.limits);
    Json j{{"n", f.size()}, {"size", closure.size()}};
    if (!cfg_.word.empty()) {
      TransitionMap query = compose_word(f, word());
      Json q{{"word", to_json(word())}};
      if (!cfg_.conjugate.empty()) {
        const Permutation p = parse_permutation(cfg_.conjugate);
        query = conjugate_by_coord_perm(query, p);
        q["conjugated_by"] = to_json(p);
      }
      q["map"] = to_json(query);
      q["member"] = closure.contains(query);
      j["query"] = q;
    } else if (!cfg_.conjugate.empty()) {
      throw ParseError("--conjugate needs --word");
    }
    print(j);
  }

 private:
  System system(std::size_t k) const { return load_system(cfg_.files.at(k), cfg_.limits); }
  DepGraph graph() const {
    if (cfg_.graph_path.empty()) throw ParseError("missing --graph");
    return load_graph(cfg_.graph_path);
  }
  Word word() const {
    if (cfg_.word.empty()) throw ParseError("missing --word");
    return parse_word(cfg_.word);
  }
  void print(const Json& j) { out_ << j.dump(2) << '\n'; }

  RunConfig cfg_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.limits = Limits::from_env();
  } catch (const Error& e) {
    emit_error(err, kind_name(e.kind()), e.what());
    return exit_code(e.kind());
  }

  CLI::App app{"Finite dynamical systems on binary strings", "fds"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized sampling");
  app.add_option("--threads", cfg.threads, "Worker threads for parallel kernels");
  app.add_option("--max-words", cfg.limits.max_words, "Word enumeration budget");
  app.add_option("--max-class", cfg.limits.max_class, "Equivalence class size cap");
  app.add_option("--max-closure", cfg.limits.max_closure, "Composition closure size cap");
  app.add_option("--oracle-max-n", cfg.limits.oracle_max_n, "Dimension cap for the oracle");
  app.add_option("--iso-max-n", cfg.limits.iso_max_n, "Dimension cap for isomorphism search");
  app.add_option("--closure-max-n", cfg.limits.closure_max_n, "Dimension cap for closures");

  auto add_files = [&](CLI::App* sub, int count) {
    sub->add_option("files", cfg.files, "System files (.fds)")->required()->expected(count);
  };
  auto add_word = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--word", cfg.word, "Comma-separated update schedule");
    if (required) o->required();
  };
  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--graph", cfg.graph_path, "Graph file");
    if (required) o->required();
  };

  auto* deps = app.add_subcommand("deps", "Dependency graph phi(f)");
  add_files(deps, 1);
  deps->add_flag("--oracle", cfg.oracle, "Cross-check against the commutation oracle");
  deps->add_flag("--matrix", cfg.matrix, "Include the coefficient matrix");

  auto* lin = app.add_subcommand("linearize", "Linearization of a system or graph");
  lin->add_option("files", cfg.files, "System file")->expected(0, 1);
  add_graph(lin, false);

  auto* equiv = app.add_subcommand("equiv", "Graph equivalence of two systems");
  add_files(equiv, 2);

  auto* compose = app.add_subcommand("compose", "Composed map f^w");
  add_files(compose, 1);
  add_word(compose, true);

  auto* statespace = app.add_subcommand("statespace", "State space of f^w");
  add_files(statespace, 1);
  add_word(statespace, true);
  statespace->add_option("--dot", cfg.dot_path, "Also write the state space as DOT");

  auto* cycles = app.add_subcommand("cycles", "Limit cycles of f^w");
  add_files(cycles, 1);
  add_word(cycles, true);

  auto* stable = app.add_subcommand("stable", "Stable isomorphism of f^w and g^w");
  add_files(stable, 2);
  add_word(stable, true);

  auto* bound = app.add_subcommand("bound", "Distinct systems versus word classes");
  add_files(bound, 1);
  bound->add_option("-t", cfg.length, "Word length");
  bound->add_flag("--perms", cfg.perms, "Only permutations of 1..n");
  bound->add_flag("--explain", cfg.explain, "Attach explanatory notes");
  bound->add_option("--max-witnesses", cfg.max_witnesses, "Witness pairs to list");

  auto* words = app.add_subcommand("words", "Word classes under a graph");
  add_graph(words, true);
  words->add_option("-n", cfg.n, "Alphabet size");
  words->add_option("-t", cfg.length, "Word length");
  add_word(words, false);
  words->add_option("--other", cfg.other_word, "Second word for an equivalence query");

  auto* hgraph = app.add_subcommand("hgraph", "Occurrence graph of a word");
  add_graph(hgraph, true);
  add_word(hgraph, true);
  hgraph->add_flag("--explain", cfg.explain, "Attach explanatory notes");

  auto* psi = app.add_subcommand("psi", "Membership in Psi(G), or sampling from it");
  psi->add_option("files", cfg.files, "System file")->expected(0, 1);
  add_graph(psi, true);
  psi->add_option("--sample", cfg.sample, "Draw this many random members");

  auto* psi_size = app.add_subcommand("psi-size", "Cardinality of Psi(G)");
  add_graph(psi_size, true);

  auto* dlocal = app.add_subcommand("dlocal", "d-locality on a graph");
  add_files(dlocal, 1);
  add_graph(dlocal, true);
  dlocal->add_option("-d", cfg.radius, "Radius")->required();

  auto* monoid = app.add_subcommand("monoid", "Closure of {f^1..f^n} under composition");
  add_files(monoid, 1);
  add_word(monoid, false);
  monoid->add_option("--conjugate", cfg.conjugate, "Conjugate the query by a coordinate permutation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kParseError;
  }

  if (cfg.threads > 0) set_threads(cfg.threads);
  std::ostringstream buffer;
  Runner runner(cfg, buffer);
  try {
    if (deps->parsed()) runner.deps();
    else if (lin->parsed()) {
      if (cfg.files.empty() && cfg.graph_path.empty())
        throw ParseError("linearize needs a system file or --graph");
      runner.linearize_cmd();
    }
    else if (equiv->parsed()) runner.equiv();
    else if (compose->parsed()) runner.compose();
    else if (statespace->parsed()) runner.statespace();
    else if (cycles->parsed()) runner.cycles();
    else if (stable->parsed()) runner.stable();
    else if (bound->parsed()) runner.bound();
    else if (words->parsed()) runner.words();
    else if (hgraph->parsed()) runner.hgraph();
    else if (psi->parsed()) runner.psi();
    else if (psi_size->parsed()) runner.psi_size();
    else if (dlocal->parsed()) runner.dlocal();
    else if (monoid->parsed()) runner.monoid();
  } catch (const Error& e) {
    if (cfg.threads > 0) set_threads(0);
    emit_error(err, kind_name(e.kind()), e.what());
    return exit_code(e.kind());
  }
  if (cfg.threads > 0) set_threads(0);
  out << buffer.str();
  return kOk;
}

}  // namespace fds::cli
