#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catdeg/monoid.hpp"

namespace catdeg::verify {

struct CheckResult {
  std::string name;
  std::string claim;  // the statement being checked, in one line
  bool passed = false;
  std::string detail;
};

/// Random minimal, coprime generating sets: k uniform in [min_k, max_k],
/// generators uniform in [2, max_gen]. Deterministic in `seed`.
std::vector<NumericalMonoid> random_monoids(std::size_t count, std::size_t min_k,
                                            std::size_t max_k, std::int64_t max_gen,
                                            std::uint64_t seed);

CheckResult check_example_450();
CheckResult check_example_11_25_29();

/// Sandwich bound at every element with two or more factorizations in the
/// default window of each monoid.
CheckResult check_sandwich_sample(const std::vector<NumericalMonoid>& sample);
/// Min nonzero and max of the windowed catenary set are Betti catenary degrees.
CheckResult check_extremes_at_betti(const std::vector<NumericalMonoid>& sample);
/// C(S) = {0, c} on the window iff every Betti element has catenary degree c,
/// and 1 never occurs.
CheckResult check_two_value_classification(const std::vector<NumericalMonoid>& sample);
/// No Betti element in (bound, bound + margin].
CheckResult check_betti_bound(const std::vector<NumericalMonoid>& sample, std::int64_t margin);

CheckResult check_arithmetic_family(std::int64_t k_max, std::int64_t c_max);
CheckResult check_largecat_family(std::int64_t k_min, std::int64_t k_max);
CheckResult check_unique_betti_family();
CheckResult check_delta_remark();
CheckResult check_block_monoid(int n_min, int n_max);

CheckResult check_catenary_oracle(std::size_t sets, std::uint64_t seed);
CheckResult check_factorization_oracle(std::size_t monoids, std::size_t elements_per_monoid,
                                       std::uint64_t seed);
CheckResult check_cini_oracle(std::size_t monoids, std::uint64_t seed);
CheckResult check_membership_oracle(std::size_t pairs, std::uint64_t seed);
CheckResult check_distance_axioms(std::size_t instances, std::uint64_t seed);

struct SuiteOptions {
  std::int64_t k_max = 8;  // largest k for the large-catenary family
  std::size_t random_monoids = 50;
  std::uint64_t seed = 20160401;
};

/// Every check above at default sizes.
std::vector<CheckResult> run_default_suite(const SuiteOptions& options);

}  // namespace catdeg::verify
