#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "catdeg/monoid.hpp"

namespace catdeg {

/// Exponent vector over a fixed, ordered list of atoms.
struct Factorization {
  std::vector<std::int64_t> counts;

  Factorization() = default;
  explicit Factorization(std::vector<std::int64_t> c) : counts(std::move(c)) {}
  Factorization(std::initializer_list<std::int64_t> c) : counts(c) {}

  std::size_t dimension() const noexcept { return counts.size(); }
  bool is_zero() const noexcept;

  friend auto operator<=>(const Factorization&, const Factorization&) = default;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// All factorizations of one element of a numerical monoid, deduplicated and
/// in ascending lexicographic order.
struct FactorizationSet {
  std::int64_t element = 0;
  std::vector<Factorization> items;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }
  bool contains(const Factorization& a) const;
};

/// Sorts and deduplicates in place; the canonical order of every set.
void canonicalize(std::vector<Factorization>& items);

/// Z(n). Empty when n is not in S; {0} when n = 0. Throws NegativeElement.
FactorizationSet factorizations(const NumericalMonoid& s, std::int64_t n);

/// Number of factorizations, without materializing them.
std::int64_t count_factorizations(const NumericalMonoid& s, std::int64_t n);

std::int64_t length(const Factorization& a) noexcept;

/// Sorted distinct lengths. Throws EmptySet.
std::vector<std::int64_t> length_set(std::span<const Factorization> z);

/// Successive differences of the sorted length set. Throws EmptySet.
std::vector<std::int64_t> delta_set(std::span<const Factorization> z);

/// Coordinatewise minimum. Throws DimensionMismatch.
Factorization gcd_fact(const Factorization& a, const Factorization& b);

/// max(|a - gcd(a,b)|, |b - gcd(a,b)|). Throws DimensionMismatch.
std::int64_t distance(const Factorization& a, const Factorization& b);

/// distance() without the dimension check, for hot loops over one set.
std::int64_t distance_unchecked(const Factorization& a, const Factorization& b) noexcept;

}  // namespace catdeg
