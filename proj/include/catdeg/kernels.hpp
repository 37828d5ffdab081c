#pragma once

// Per-element scan kernels. Each comes as an OpenMP version and a serial
// reference with identical output; the public operations call the parallel
// one, tests and bench/ compare the two.

#include <cstdint>
#include <span>
#include <vector>

#include "catdeg/factorization.hpp"
#include "catdeg/monoid.hpp"

namespace catdeg::kernels {

struct ElementStats {
  std::int64_t element = 0;
  std::int64_t num_factorizations = 0;
  std::int64_t catenary = 0;
  std::int64_t nabla_components = 0;  // 0 for non-members

  friend bool operator==(const ElementStats&, const ElementStats&) = default;
};

enum class Compute : unsigned { Catenary = 1, Nabla = 2, Both = 3 };

/// Statistics for every integer in [lo, hi], in ascending order.
std::vector<ElementStats> element_stats_serial(const NumericalMonoid& s, std::int64_t lo,
                                               std::int64_t hi, Compute what = Compute::Both);
std::vector<ElementStats> element_stats_parallel(const NumericalMonoid& s, std::int64_t lo,
                                                 std::int64_t hi, Compute what = Compute::Both);

/// Union of Delta(n) over n in [0, window].
std::vector<std::int64_t> delta_union_serial(const NumericalMonoid& s, std::int64_t window);
std::vector<std::int64_t> delta_union_parallel(const NumericalMonoid& s, std::int64_t window);

/// Catenary degree of each factorization set, in input order.
std::vector<std::int64_t> catenary_many_serial(std::span<const std::vector<Factorization>> sets);
std::vector<std::int64_t> catenary_many_parallel(std::span<const std::vector<Factorization>> sets);

}  // namespace catdeg::kernels
