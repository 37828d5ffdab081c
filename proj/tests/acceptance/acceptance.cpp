// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "catdeg/parallel.hpp"
#include "catdeg/verify.hpp"

namespace v = catdeg::verify;

namespace {

constexpr std::uint64_t kSeed = 20160401;

struct Criterion {
  int number;
  std::string title;
  std::function<std::vector<v::CheckResult>()> run;
};

}  // namespace

int main() {
  catdeg::configure_threads_from_env();
  const auto sample = v::random_monoids(50, 3, 4, 60, kSeed);

  const std::vector<Criterion> criteria{
      {1, "c(450) = 16 in <11,36,39>", [] { return std::vector{v::check_example_450()}; }},
      {2, "<11,25,29> Betti catenary degrees 4,12,14 and c(175) = 11",
       [] { return std::vector{v::check_example_11_25_29()}; }},
      {3, "sandwich bound on 50 random monoids",
       [&] { return std::vector{v::check_sandwich_sample(sample)}; }},
      {4, "min nonzero and max of C(S) at Betti elements",
       [&] { return std::vector{v::check_extremes_at_betti(sample)}; }},
      {5, "arithmetic family C(S) = {0,2,c}, k <= 5, c <= 6",
       [] { return std::vector{v::check_arithmetic_family(5, 6)}; }},
      {6, "large catenary family, 3 <= k <= 8",
       [] { return std::vector{v::check_largecat_family(3, 8)}; }},
      {7, "single Betti element family", [] { return std::vector{v::check_unique_betti_family()}; }},
      {8, "<30,52,55> delta sets", [] { return std::vector{v::check_delta_remark()}; }},
      {9, "block monoid over Z_4, Z_5, Z_6", [] { return std::vector{v::check_block_monoid(4, 6)}; }},
      {10, "oracle equivalences",
       [] {
         return std::vector{v::check_catenary_oracle(1000, kSeed + 10),
                            v::check_factorization_oracle(12, 40, kSeed + 11),
                            v::check_cini_oracle(100, kSeed + 12),
                            v::check_membership_oracle(20, kSeed + 13)};
       }},
      {11, "distance axioms on 10000 instances",
       [] { return std::vector{v::check_distance_axioms(10000, kSeed + 14)}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                secs);
    for (const auto& r : results)
      if (!r.passed || !r.detail.empty())
        std::printf("    %s: %s\n", r.name.c_str(), r.detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
