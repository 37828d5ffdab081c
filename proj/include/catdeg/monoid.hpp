#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace catdeg {

/// A numerical monoid <n_1, ..., n_k> given by its minimal generators.
///
/// Construction validates the generating set (nonempty, positive, distinct,
/// minimal, coprime) and precomputes the Apery set with respect to n_1, which
/// is then the single membership authority. Instances are immutable.
class NumericalMonoid {
 public:
  /// Largest smallest-generator accepted; the Apery table holds n_1 entries.
  static constexpr std::int64_t kMaxMultiplicity = 10'000'000;

  /// Validates `gens` (any order) and builds the monoid.
  /// Throws Error with EmptyGenerators, NonPositiveGenerator,
  /// DuplicateGenerator, NotMinimal (as NotMinimalError), NotCoprime,
  /// Overflow or BadParameters.
  static NumericalMonoid create(std::span<const std::int64_t> gens);
  static NumericalMonoid create(std::initializer_list<std::int64_t> gens) {
    return create(std::span<const std::int64_t>(gens.begin(), gens.size()));
  }

  const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }
  std::int64_t multiplicity() const noexcept { return gens_.front(); }
  std::int64_t largest_generator() const noexcept { return gens_.back(); }

  /// apery()[r] is the least element of S congruent to r mod n_1.
  const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

  /// Largest integer outside S; -1 when S is all of N.
  std::int64_t frobenius() const noexcept { return frobenius_; }

  bool contains(std::int64_t n) const noexcept;

  /// Monoid divisibility: n - b lies in S. Throws NotAnElement unless b, n in S.
  bool divides(std::int64_t b, std::int64_t n) const;

  /// F(S) + 2 n_k. Every Betti element lies at or below this bound.
  std::int64_t betti_search_bound() const noexcept;

  friend bool operator==(const NumericalMonoid&, const NumericalMonoid&) = default;

 private:
  NumericalMonoid() = default;

  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> apery_;
  std::int64_t frobenius_ = -1;
};

/// Least elements per residue class mod `modulus` of the monoid spanned by
/// `gens` (which need not be coprime); unreachable residues hold -1.
/// `via[r]` records the index into `gens` of the last step on a shortest path
/// to residue r (or -1 at the root and unreachable residues).
struct ResidueTable {
  std::vector<std::int64_t> least;
  std::vector<std::int64_t> via;
};
ResidueTable shortest_residues(std::int64_t modulus,
                               std::span<const std::int64_t> gens);

/// Decides n in <n1, n2> through the two-generator symmetry criterion:
/// n is in S exactly when n1*n2 - n1 - n2 - n is not, and the right-hand side
/// is settled by direct enumeration. Throws NotCoprimePair when gcd > 1 and
/// BadParameters when either generator is below 2.
bool membership_criterion_2gen(std::int64_t n1, std::int64_t n2, std::int64_t n);

}  // namespace catdeg
