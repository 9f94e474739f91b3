#include "fds/anf.hpp"

#include <algorithm>
#include <string>

#include "fds/errors.hpp"
#include "fds/kernels.hpp"

namespace fds {

namespace {

void check_vars(int n) {
  if (n < 1 || n > kHardMaxVars)
    throw DimensionError("variable count " + std::to_string(n) +
                         " outside 1.." + std::to_string(kHardMaxVars));
}

void check_same(int a, int b) {
  if (a != b)
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
}

std::uint32_t all_vars(int n) {
  return n >= 32 ? ~0u : ((1u << n) - 1u);
}

// Sort, then drop pairs of equal monomials (characteristic 2).
std::vector<Monomial> cancel(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

}  // namespace

Monomial Monomial::var(int k) {
  if (k < 1 || k > kHardMaxVars)
    throw DimensionError("variable index x" + std::to_string(k) + " out of range");
  return Monomial{1u << (k - 1)};
}

Anf::Anf(int n) : n_(n) { check_vars(n); }

Anf::Anf(int n, std::vector<Monomial> terms) : n_(n) {
  check_vars(n);
  for (Monomial m : terms)
    if (m.mask() & ~all_vars(n))
      throw DimensionError("monomial uses a variable beyond x" + std::to_string(n));
  terms_ = cancel(std::move(terms));
}

Anf Anf::var(int n, int k) {
  if (k < 1 || k > n)
    throw DimensionError("variable index x" + std::to_string(k) + " not in 1.." +
                         std::to_string(n));
  return Anf(n, {Monomial::var(k)});
}

int Anf::degree() const {
  int d = 0;
  for (Monomial m : terms_) d = std::max(d, m.degree());
  return d;
}

bool Anf::is_linear() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](Monomial m) { return m.degree() == 1; });
}

bool Anf::eval(State s) const {
  if (s & ~all_vars(n_))
    throw DimensionError("state has bits beyond coordinate " + std::to_string(n_));
  bool v = false;
  for (Monomial m : terms_) v ^= m.eval(s);
  return v;
}

std::uint32_t Anf::support_mask() const {
  std::uint32_t mask = 0;
  for (Monomial m : terms_) mask |= m.mask();
  return mask;
}

std::vector<int> Anf::support() const {
  std::vector<int> out;
  const std::uint32_t mask = support_mask();
  for (int k = 1; k <= n_; ++k)
    if ((mask >> (k - 1)) & 1u) out.push_back(k);
  return out;
}

Anf Anf::operator+(const Anf& other) const {
  check_same(n_, other.n_);
  std::vector<Monomial> all(terms_);
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return Anf(n_, std::move(all));
}

Anf Anf::operator*(const Anf& other) const {
  check_same(n_, other.n_);
  std::vector<Monomial> all;
  all.reserve(terms_.size() * other.terms_.size());
  for (Monomial a : terms_)
    for (Monomial b : other.terms_) all.push_back(a * b);
  return Anf(n_, std::move(all));
}

TruthTable::TruthTable(int n) : n_(n) {
  check_vars(n);
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
}

void TruthTable::set(State s, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (s & 63);
  if (value)
    words_[s >> 6] |= bit;
  else
    words_[s >> 6] &= ~bit;
}

TruthTable anf_to_tt(const Anf& p) {
  TruthTable t(p.num_vars());
  for (Monomial m : p.terms()) t.set(m.mask(), true);
  kernels::moebius_transform(t.words(), p.num_vars());
  return t;
}

Anf tt_to_anf(const TruthTable& t) {
  TruthTable coeffs = t;
  kernels::moebius_transform(coeffs.words(), t.num_vars());
  std::vector<Monomial> terms;
  const auto words = coeffs.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      terms.emplace_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return Anf(t.num_vars(), std::move(terms));
}

std::vector<Monomial> graded_basis(int n) {
  check_vars(n);
  std::vector<Monomial> basis;
  basis.reserve(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) basis.emplace_back(m);
  // Equal sizes: the set holding the lowest differing index is lex-smaller.
  std::sort(basis.begin(), basis.end(), [](Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const std::uint32_t diff = a.mask() ^ b.mask();
    return diff != 0 && (a.mask() & (diff & (~diff + 1))) != 0;
  });
  return basis;
}

std::vector<std::uint8_t> coefficient_row(const Anf& p) {
  const auto basis = graded_basis(p.num_vars());
  std::vector<std::uint8_t> row(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    row[i] = std::binary_search(p.terms().begin(), p.terms().end(), basis[i]) ? 1 : 0;
  return row;
}

Anf from_coefficient_row(int n, std::span<const std::uint8_t> row) {
  const auto basis = graded_basis(n);
  if (row.size() != basis.size())
    throw DimensionError("coefficient row length " + std::to_string(row.size()) +
                         " != 2^" + std::to_string(n));
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (row[i]) terms.push_back(basis[i]);
  return Anf(n, std::move(terms));
}

}  // namespace fds
