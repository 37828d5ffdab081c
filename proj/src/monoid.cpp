#include "catdeg/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "catdeg/error.hpp"

namespace catdeg {

ResidueTable shortest_residues(std::int64_t modulus,
                               std::span<const std::int64_t> gens) {
  const auto m = static_cast<std::size_t>(modulus);
  ResidueTable table{std::vector<std::int64_t>(m, -1),
                     std::vector<std::int64_t>(m, -1)};
  using Entry = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  table.least[0] = 0;
  frontier.emplace(0, 0);
  while (!frontier.empty()) {
    auto [dist, r] = frontier.top();
    frontier.pop();
    if (dist != table.least[r]) continue;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::int64_t next = dist + gens[i];
      const auto s = static_cast<std::size_t>(next % modulus);
      if (table.least[s] < 0 || next < table.least[s]) {
        table.least[s] = next;
        table.via[s] = static_cast<std::int64_t>(i);
        frontier.emplace(next, s);
      }
    }
  }
  return table;
}

namespace {

// Throws NotMinimalError if gens[idx] lies in the monoid spanned by the rest.
void check_not_representable(std::span<const std::int64_t> gens, std::size_t idx) {
  std::vector<std::int64_t> others;
  for (std::size_t j = 0; j < gens.size(); ++j)
    if (j != idx) others.push_back(gens[j]);
  if (others.empty()) return;
  const std::int64_t target = gens[idx];
  const std::int64_t modulus = others.front();
  if (modulus > target) return;  // every other generator is larger
  const ResidueTable table = shortest_residues(modulus, others);
  const auto r = static_cast<std::size_t>(target % modulus);
  if (table.least[r] < 0 || table.least[r] > target) return;

  std::vector<std::int64_t> witness(others.size(), 0);
  witness[0] = (target - table.least[r]) / modulus;
  std::size_t cur = r;
  std::int64_t remaining = table.least[r];
  while (remaining > 0) {
    const auto step = static_cast<std::size_t>(table.via[cur]);
    ++witness[step];
    remaining -= others[step];
    cur = static_cast<std::size_t>(((remaining % modulus) + modulus) % modulus);
  }
  throw NotMinimalError(target, std::move(others), std::move(witness));
}

}  // namespace

NumericalMonoid NumericalMonoid::create(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw Error(Errc::EmptyGenerators, "no generators given");
  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  for (std::int64_t g : sorted)
    if (g <= 0)
      throw Error(Errc::NonPositiveGenerator,
                  "generator " + std::to_string(g) + " is not positive");
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      dup != sorted.end())
    throw Error(Errc::DuplicateGenerator,
                "generator " + std::to_string(*dup) + " repeated");
  if (sorted.front() > kMaxMultiplicity)
    throw Error(Errc::BadParameters,
                "smallest generator exceeds " + std::to_string(kMaxMultiplicity));
  std::int64_t product = 0;
  if (__builtin_mul_overflow(sorted.front(), sorted.back(), &product))
    throw Error(Errc::Overflow, "n_1 * n_k overflows 64-bit arithmetic");

  for (std::size_t i = 0; i < sorted.size(); ++i)
    check_not_representable(sorted, i);

  std::int64_t g = 0;
  for (std::int64_t x : sorted) g = std::gcd(g, x);
  if (g != 1)
    throw Error(Errc::NotCoprime, "generators share the factor " + std::to_string(g));

  NumericalMonoid s;
  s.gens_ = std::move(sorted);
  s.apery_ = shortest_residues(s.gens_.front(), s.gens_).least;
  s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - s.gens_.front();
  return s;
}

bool NumericalMonoid::contains(std::int64_t n) const noexcept {
  if (n < 0) return false;
  return n >= apery_[static_cast<std::size_t>(n % gens_.front())];
}

bool NumericalMonoid::divides(std::int64_t b, std::int64_t n) const {
  if (!contains(b))
    throw Error(Errc::NotAnElement, std::to_string(b) + " is not in the monoid");
  if (!contains(n))
    throw Error(Errc::NotAnElement, std::to_string(n) + " is not in the monoid");
  return contains(n - b);
}

std::int64_t NumericalMonoid::betti_search_bound() const noexcept {
  return frobenius_ + 2 * gens_.back();
}

bool membership_criterion_2gen(std::int64_t n1, std::int64_t n2, std::int64_t n) {
  if (n1 < 2 || n2 < 2)
    throw Error(Errc::BadParameters, "both generators must be at least 2");
  if (std::gcd(n1, n2) != 1)
    throw Error(Errc::NotCoprimePair,
                std::to_string(n1) + " and " + std::to_string(n2) + " are not coprime");
  const std::int64_t mirror = n1 * n2 - n1 - n2 - n;
  if (mirror < 0) return true;
  for (std::int64_t a = 0; a * n1 <= mirror; ++a)
    if ((mirror - a * n1) % n2 == 0) return false;
  return true;
}

}  // namespace catdeg
