#include "fds/system.hpp"

#include <array>
#include <string>

#include "fds/errors.hpp"
#include "fds/kernels.hpp"

namespace fds {

void Word::check(int n) const {
  if (letters_.empty()) throw DimensionError("empty word");
  for (int letter : letters_)
    if (letter < 1 || letter > n)
      throw DimensionError("word letter " + std::to_string(letter) + " not in 1.." +
                           std::to_string(n));
}

TransitionMap::TransitionMap(int n, std::vector<State> next)
    : n_(n), next_(std::move(next)) {
  if (n < 1 || n > kHardMaxVars || next_.size() != (std::size_t{1} << n))
    throw DimensionError("transition map must list 2^n successors");
  const State limit = static_cast<State>(next_.size());
  for (State s : next_)
    if (s >= limit) throw DimensionError("successor outside the state set");
}

TransitionMap TransitionMap::identity(int n) {
  std::vector<State> next(std::size_t{1} << n);
  for (std::size_t s = 0; s < next.size(); ++s) next[s] = static_cast<State>(s);
  return TransitionMap(n, std::move(next));
}

TransitionMap TransitionMap::followed_by(const TransitionMap& then) const {
  if (then.n_ != n_) throw DimensionError("composing maps of different dimension");
  std::vector<State> out(next_.size());
  for (std::size_t s = 0; s < next_.size(); ++s) out[s] = then.next_[next_[s]];
  return TransitionMap(n_, std::move(out));
}

System::System(std::vector<Anf> updates) : updates_(std::move(updates)) {
  const int n = size();
  if (n < 1 || n > kHardMaxVars)
    throw DimensionError("system dimension " + std::to_string(n) + " outside 1.." +
                         std::to_string(kHardMaxVars));
  for (const Anf& u : updates_)
    if (u.num_vars() != n)
      throw DimensionError("update in " + std::to_string(u.num_vars()) +
                           " variables for a system of dimension " + std::to_string(n));
}

const Anf& System::update(int i) const {
  if (i < 1 || i > size())
    throw DimensionError("coordinate " + std::to_string(i) + " not in 1.." +
                         std::to_string(size()));
  return updates_[i - 1];
}

System System::with_update(int i, Anf update) const {
  (void)this->update(i);
  std::vector<Anf> copy = updates_;
  copy[i - 1] = std::move(update);
  return System(std::move(copy));
}

State apply_local(const System& f, int i, State s) {
  const Anf& u = f.update(i);
  const State bit = State{1} << (i - 1);
  return u.eval(s) ? (s | bit) : (s & ~bit);
}

TransitionMap local_map(const System& f, int i) {
  return compose_word(f, Word({i}));
}

TransitionMap compose_word(const System& f, const Word& w) {
  w.check(f.size());
  return TransitionMap(f.size(),
                       kernels::compose_bitsliced(f.size(), f.updates(), w.letters()));
}

DepGraph phi(const System& f) {
  const int n = f.size();
  DepGraph g(n);
  for (int i = 1; i <= n; ++i) {
    const std::uint32_t si = f.update(i).support_mask();
    for (int j = i + 1; j <= n; ++j) {
      const std::uint32_t sj = f.update(j).support_mask();
      if (!((sj >> (i - 1)) & 1u) && !((si >> (j - 1)) & 1u)) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

// f^i as a successor table, evaluated pointwise (no support information).
std::vector<State> pointwise_local(const Anf& update, int i) {
  const std::size_t states = std::size_t{1} << update.num_vars();
  const State bit = State{1} << (i - 1);
  std::vector<State> out(states);
  for (std::size_t s = 0; s < states; ++s) {
    const State st = static_cast<State>(s);
    out[s] = update.eval(st) ? (st | bit) : (st & ~bit);
  }
  return out;
}

bool commute(const std::vector<State>& a, const std::vector<State>& b) {
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a[b[s]] != b[a[s]]) return false;
  return true;
}

}  // namespace

DepGraph phi_oracle(const System& f, const Limits& limits) {
  const int n = f.size();
  if (n > limits.oracle_max_n)
    throw BudgetError("commutation oracle limited to n <= " +
                      std::to_string(limits.oracle_max_n) + ", got " + std::to_string(n));

  std::vector<std::vector<State>> base(n);
  std::vector<std::array<std::vector<State>, 4>> zero_local(n);
  for (int k = 1; k <= n; ++k) {
    base[k - 1] = pointwise_local(f.update(k), k);
    const Anf xk = Anf::var(n, k);
    const std::array<Anf, 4> maps = {xk, Anf::zero(n), Anf::one(n), Anf::one(n) + xk};
    for (int r = 0; r < 4; ++r) zero_local[k - 1][r] = pointwise_local(maps[r], k);
  }

  DepGraph g = DepGraph::complete(n);
  auto check_tuple = [&](const std::vector<const std::vector<State>*>& tuple) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (g.has_edge(i, j) && !commute(*tuple[i - 1], *tuple[j - 1]))
          g.remove_edge(i, j);
  };

  std::vector<const std::vector<State>*> tuple(n);
  for (int k = 0; k < n; ++k) tuple[k] = &base[k];
  check_tuple(tuple);
  for (int k = 0; k < n; ++k) {
    for (int r = 0; r < 4; ++r) {
      tuple[k] = &zero_local[k][r];
      check_tuple(tuple);
    }
    tuple[k] = &base[k];
  }
  return g;
}

}  // namespace fds
