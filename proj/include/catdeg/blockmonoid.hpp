#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "catdeg/factorization.hpp"

namespace catdeg {

/// A sequence over Z_n stored as multiplicities: multiplicity()[g] copies of g.
/// Always zero-sum.
class ZeroSumSequence {
 public:
  /// Throws OrderTooSmall (n < 1), BadParameters (size or sign) or NotZeroSum.
  static ZeroSumSequence create(int order, std::vector<std::int64_t> multiplicity);

  int order() const noexcept { return order_; }
  const std::vector<std::int64_t>& multiplicity() const noexcept { return mult_; }
  std::int64_t operator[](int g) const { return mult_[static_cast<std::size_t>(g)]; }
  std::int64_t length() const noexcept;
  bool empty() const noexcept { return length() == 0; }

  /// Pointwise <=; false across different groups.
  bool divides(const ZeroSumSequence& other) const noexcept;

  friend auto operator<=>(const ZeroSumSequence&, const ZeroSumSequence&) = default;
  friend bool operator==(const ZeroSumSequence&, const ZeroSumSequence&) = default;

 private:
  int order_ = 0;
  std::vector<std::int64_t> mult_;
};

/// Minimal zero-sum sequences over Z_n, sorted by length then multiplicity.
struct AtomTable {
  int order = 0;
  std::vector<ZeroSumSequence> atoms;

  /// Index of `a` in `atoms`, or -1.
  std::ptrdiff_t index_of(const ZeroSumSequence& a) const;
};

inline constexpr int kMaxBlockOrder = 10;

/// Enumerates every atom of B(Z_n). Throws OrderTooSmall (n < 3) or
/// OrderTooLarge (n > 10). Also confirms no zero-sum sequence of length
/// n + 1 is minimal, i.e. that the Davenport constant is n.
AtomTable atoms(int n);

/// True iff no proper nonempty subsequence of `a` is zero-sum.
bool is_minimal_zero_sum(const ZeroSumSequence& a);

struct BlockFactorizationSet {
  ZeroSumSequence element;
  std::vector<Factorization> items;  // exponent vectors over the AtomTable index
};

/// Every way to write `a` as a product of atoms. Throws GroupMismatch.
BlockFactorizationSet factorizations_block(const AtomTable& table, const ZeroSumSequence& a);

/// Factorizations over the atoms dividing `a` only (dimension = number of
/// dividing atoms). Distances and catenary degrees agree with the full form.
std::vector<Factorization> factorizations_block_compact(const AtomTable& table,
                                                        const ZeroSumSequence& a);

/// Sequence over Z_n (generator g = 1) with catenary degree j:
///   j = 2:  (2g)^2 g^(2n-4)
///   j >= 3: (-g)^(j-1) g^n h with h = (j-1) g.
/// Throws BadParameters unless n >= 4 and 2 <= j <= n.
ZeroSumSequence theorem_fullset_witness(int n, int j);

/// All zero-sum sequences over Z_n of length <= max_length (the empty one first).
std::vector<ZeroSumSequence> zero_sum_sequences(int n, std::int64_t max_length);

/// Catenary degrees attained by zero-sum sequences of length <= max_length.
/// Requires 3 <= n <= 8 and 0 <= max_length <= 3n; throws OrderTooSmall,
/// OrderTooLarge or BadParameters.
std::vector<std::int64_t> catenary_set_sample(int n, std::int64_t max_length);
std::vector<std::int64_t> catenary_set_sample_serial(int n, std::int64_t max_length);

inline constexpr int kMaxSampleOrder = 8;

}  // namespace catdeg
