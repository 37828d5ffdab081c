#pragma once

// Brute-force reference computations. None of these share code paths with the
// library routines they are compared against: no Apery tables, no DFS
// enumeration, no union-find.

#include <cstdint>
#include <span>
#include <vector>

#include "catdeg/factorization.hpp"

namespace catdeg::oracle {

/// n in <gens> from a reachability table over [0, n].
bool contains_brute(std::span<const std::int64_t> gens, std::int64_t n);

/// Z(n) by nested loops over all but the last coordinate, ascending generator
/// order, with the last coordinate solved by division. Sorted.
std::vector<Factorization> factorizations_nested(std::span<const std::int64_t> gens,
                                                 std::int64_t n);

/// Smallest N among the pairwise distances (or 0) for which the graph keeping
/// only edges of weight <= N is connected, checked by breadth-first search.
std::int64_t catenary_threshold(std::span<const Factorization> z);

/// Components of the gcd graph built with explicit pairwise gcd tests and BFS.
std::int64_t nabla_components_bfs(std::span<const Factorization> z);

/// True iff no proper nonempty sub-multiset of `mult` (over Z_n) sums to 0,
/// enumerating every sub-multiset explicitly.
bool minimal_zero_sum_brute(int n, std::span<const std::int64_t> mult);

/// Atom count of B(Z_n) by enumerating every multiset of length <= n.
std::size_t atom_count_brute(int n);

}  // namespace catdeg::oracle
