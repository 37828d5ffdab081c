#include "catdeg/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"

namespace catdeg {

std::int64_t prediction_window(const FamilyPrediction& p) {
  std::int64_t window = default_scan_window(p.monoid);
  for (const auto& b : p.predicted_betti) window = std::max(window, b.element);
  for (const auto& e : p.special_elements) window = std::max(window, e.element);
  return window;
}

FamilyPrediction arithmetic_family(std::int64_t k, std::int64_t c) {
  if (k < 3 || c < 3)
    throw Error(Errc::BadParameters, "arithmetic family needs k >= 3 and c >= 3");
  if (std::gcd(k, c - 2) != 1)
    throw Error(Errc::NotCoprime, "gcd(k, c - 2) = " + std::to_string(std::gcd(k, c - 2)));
  std::vector<std::int64_t> gens;
  for (std::int64_t i = 0; i < k; ++i) gens.push_back(k + i * (c - 2));
  return FamilyPrediction{NumericalMonoid::create(gens), {}, {0, 2, c}, true, {}};
}

std::int64_t largecat_special_element(std::int64_t k, std::int64_t j) noexcept {
  return 6 * k * k + (6 * j + 1) * k - 5 * j - 5;
}

FamilyPrediction largecat_family(std::int64_t k) {
  if (k < 3) throw Error(Errc::BadParameters, "large catenary family needs k >= 3");
  const std::int64_t n1 = 2 * k + 1;
  const std::int64_t n2 = 6 * k - 5;
  const std::int64_t n3 = 6 * k - 1;
  FamilyPrediction p{NumericalMonoid::create({n1, n2, n3}), {}, {}, false, {}};

  // v = (k+1) n2 = (3k-4) n1 + n3 is s_0; its two factorizations sit at
  // distance max(k+1, 3k-3) = 3k-3.
  p.predicted_betti = {{2 * n3, 4}, {(k + 1) * n2, 3 * k - 3}, {(3 * k - 1) * n1, 3 * k - 1}};
  std::sort(p.predicted_betti.begin(), p.predicted_betti.end(),
            [](const auto& a, const auto& b) { return a.element < b.element; });

  for (std::int64_t j = 0; j <= k - 2; ++j)
    p.special_elements.push_back({largecat_special_element(k, j), 3 * k - 3 - j, j + 2});

  std::vector<std::int64_t> members{0, 4, 3 * k - 1};
  for (std::int64_t c = 2 * k - 1; c <= 3 * k - 3; ++c) members.push_back(c);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  p.predicted_cset_members = std::move(members);
  return p;
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FamilyPrediction unique_betti_family(std::span<const std::int64_t> primes) {
  if (primes.size() < 2) throw Error(Errc::TooFew, "need at least two primes");
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i]))
      throw Error(Errc::NotDistinctPrimes, std::to_string(primes[i]) + " is not prime");
    if (i > 0 && primes[i] <= primes[i - 1])
      throw Error(Errc::NotDistinctPrimes, "primes must be distinct and ascending");
  }
  std::int64_t product = 1;
  for (std::int64_t p : primes)
    if (__builtin_mul_overflow(product, p, &product))
      throw Error(Errc::Overflow, "product of primes overflows");
  std::vector<std::int64_t> gens;
  for (std::int64_t p : primes) gens.push_back(product / p);
  const std::int64_t largest = primes.back();
  return FamilyPrediction{NumericalMonoid::create(gens), {{product, largest}}, {0, largest},
                          true, {}};
}

}  // namespace catdeg
