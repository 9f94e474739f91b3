#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "fds/graph.hpp"
#include "fds/system.hpp"

namespace fds {

using BigInt = boost::multiprecision::cpp_int;

/// Row i of m becomes the update sum_j m_ij x_j.
System linear_system(const BitMatrix& m);

/// Permutation p with perm_act(p, linearize(phi(f))) == linearize(phi(g)).
std::optional<Permutation> graph_equivalent(const System& f, const System& g,
                                            const Limits& limits = {});

/// Every update f^j_j reads only coordinates within distance d of j in y.
/// For d >= n the class is unrestricted and the answer is always true.
bool is_d_local(const System& f, const DepGraph& y, int d);

/// f is one of the tuples modeled by g: each update reads only its closed
/// neighborhood in the complement of g.
bool psi_membership(const System& f, const DepGraph& g);

/// |Psi(G)| = prod_i 2^(2^(1 + deg(i))) with degrees taken in the complement.
/// Always a power of two, so it is kept as its exponent.
struct PsiCardinality {
  std::uint64_t log2 = 0;
  BigInt value() const { return BigInt{1} << log2; }
};
PsiCardinality psi_cardinality(const DepGraph& g);

/// Phi of the whole set Psi(G), by exhausting every admissible update of
/// every coordinate. Throws BudgetError if some closed neighborhood has more
/// than 4 vertices (2^16 functions).
DepGraph phi_of_psi(const DepGraph& g);

}  // namespace fds
