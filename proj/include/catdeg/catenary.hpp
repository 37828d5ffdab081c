#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "catdeg/factorization.hpp"
#include "catdeg/monoid.hpp"

namespace catdeg {

/// Least N such that every pair of factorizations is joined by an N-chain.
///
/// Pairwise distances are bucketed by weight and inserted in ascending order
/// into a union-find structure; the weight of the insertion that first leaves
/// a single component is the answer (the bottleneck of a minimum spanning
/// tree). A singleton set has catenary degree 0. Throws EmptySet.
std::int64_t catenary_degree(std::span<const Factorization> z);
inline std::int64_t catenary_degree(const FactorizationSet& z) {
  return catenary_degree(std::span<const Factorization>(z.items));
}

/// True iff every chain member is in `z` and consecutive distances are <= n.
/// Throws FactorizationNotInSet, or BadParameters for an empty chain.
bool verify_nchain(const FactorizationSet& z, std::span<const Factorization> chain,
                   std::int64_t n);

/// Components of the graph on `z` joining factorizations with a common atom.
/// Throws EmptySet.
std::int64_t nabla_components(std::span<const Factorization> z);
inline std::int64_t nabla_components(const FactorizationSet& z) {
  return nabla_components(std::span<const Factorization>(z.items));
}

struct BettiRecord {
  std::int64_t element = 0;
  FactorizationSet factorizations;
  std::int64_t catenary = 0;
  std::int64_t components = 0;
};

/// Betti elements of a numerical monoid found by an exhaustive scan of
/// [1, search_bound].
///
/// The bound F(S) + 2 n_k is complete: for n beyond it, n - n_i - n_j lies in S
/// for every pair of atoms, so for any a, b in Z(n) with n_i in supp(a) and n_j
/// in supp(b), e_i + e_j plus any factorization of n - n_i - n_j shares an atom
/// with both and the gcd graph is connected. (Betti finiteness itself is a
/// classical result; this particular bound is our own.)
struct BettiReport {
  NumericalMonoid monoid;
  std::vector<BettiRecord> betti;  // ascending by element
  std::int64_t search_bound = 0;

  std::vector<std::int64_t> elements() const;
  std::vector<std::int64_t> catenary_degrees() const;
};

BettiReport betti_elements(const NumericalMonoid& s);

/// For three generators: the distinct values c_i n_i where c_i is the least
/// positive multiple of n_i lying in the monoid spanned by the other two.
/// Every Betti element of a 3-generated numerical monoid is among them.
/// Throws NotEmbeddingDimension3.
std::vector<std::int64_t> betti_via_cini(const NumericalMonoid& s);

/// Betti elements b of the report with n - b in S. Throws NotAnElement.
std::vector<std::int64_t> dividing_betti(const NumericalMonoid& s,
                                         const BettiReport& report, std::int64_t n);

struct SandwichCheck {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t catenary = 0;
  bool ok = false;
};

/// Compares c(n) with the extreme catenary degrees of the Betti elements
/// dividing n. Throws NotAnElement, or UniqueFactorization when c(n) = 0.
SandwichCheck check_sandwich(const NumericalMonoid& s, const BettiReport& report,
                             std::int64_t n);

/// c(n) for every element of S in [0, window] and the set of values attained.
/// This is C(S) restricted to the window, not a certificate for all of C(S).
struct CatenaryScan {
  std::map<std::int64_t, std::int64_t> per_element;
  std::vector<std::int64_t> cset;
};

CatenaryScan catenary_set_scan(const NumericalMonoid& s, std::int64_t window);

/// F(S) + 2 n_k + 200: past the Betti bound with margin to spare.
std::int64_t default_scan_window(const NumericalMonoid& s) noexcept;

}  // namespace catdeg
