#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "catdeg/monoid.hpp"

namespace catdeg {

struct PredictedBetti {
  std::int64_t element = 0;
  std::int64_t catenary = 0;
};

struct PredictedElement {
  std::int64_t element = 0;
  std::int64_t catenary = 0;
  std::int64_t num_factorizations = 0;
};

/// A monoid from one of the explicit families, with what the family's theorem
/// says about it. Constructors only predict; checking is the caller's job.
struct FamilyPrediction {
  NumericalMonoid monoid;
  std::vector<PredictedBetti> predicted_betti;  // empty when the family makes no claim
  std::vector<std::int64_t> predicted_cset_members;  // ascending
  /// True when predicted_cset_members is claimed to be all of C(S), false when
  /// it is only claimed to be contained in C(S).
  bool cset_exact = false;
  std::vector<PredictedElement> special_elements;
};

/// Scan window covering every element the prediction names: the default
/// window, extended to the largest special element.
std::int64_t prediction_window(const FamilyPrediction& p);

/// S = <k, k + (c-2), ..., k + (k-1)(c-2)>, with C(S) = {0, 2, c}.
/// Throws BadParameters (c < 3 or k < 3) or NotCoprime (gcd(k, c-2) > 1).
FamilyPrediction arithmetic_family(std::int64_t k, std::int64_t c);

/// S = <2k+1, 6k-5, 6k-1> for k >= 3: Betti elements (3k-1)n1, (k+1)n2, 2n3,
/// and elements s_j = 6k^2 + (6j+1)k - 5j - 5 (0 <= j <= k-2) with j+2
/// factorizations and catenary degree 3k-3-j. Throws BadParameters.
FamilyPrediction largecat_family(std::int64_t k);

/// s_j of the family above.
std::int64_t largecat_special_element(std::int64_t k, std::int64_t j) noexcept;

/// For distinct ascending primes p_1 < ... < p_k, the monoid generated by
/// P/p_i (P the product). It has the single Betti element P and C(S) = {0, p_k}.
/// Throws TooFew, NotDistinctPrimes or Overflow.
FamilyPrediction unique_betti_family(std::span<const std::int64_t> primes);

}  // namespace catdeg
