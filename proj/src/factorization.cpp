#include "catdeg/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "catdeg/error.hpp"

namespace catdeg {

bool Factorization::is_zero() const noexcept {
  return std::all_of(counts.begin(), counts.end(), [](std::int64_t c) { return c == 0; });
}

bool FactorizationSet::contains(const Factorization& a) const {
  return std::binary_search(items.begin(), items.end(), a);
}

void canonicalize(std::vector<Factorization>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

namespace {

// Depth-first over coordinates, largest generator first, a_i <= remaining / n_i.
// The smallest generator is settled by divisibility.
template <class Visit>
void enumerate(const std::vector<std::int64_t>& gens, std::int64_t n, Visit&& visit) {
  const std::size_t k = gens.size();
  std::vector<std::int64_t> counts(k, 0);
  auto recurse = [&](auto&& self, std::size_t idx, std::int64_t remaining) -> void {
    if (idx == 0) {
      if (remaining % gens[0] != 0) return;
      counts[0] = remaining / gens[0];
      visit(counts);
      return;
    }
    for (std::int64_t a = remaining / gens[idx]; a >= 0; --a) {
      counts[idx] = a;
      self(self, idx - 1, remaining - a * gens[idx]);
    }
    counts[idx] = 0;
  };
  recurse(recurse, k - 1, n);
}

}  // namespace

FactorizationSet factorizations(const NumericalMonoid& s, std::int64_t n) {
  if (n < 0)
    throw Error(Errc::NegativeElement, std::to_string(n) + " is negative");
  FactorizationSet out;
  out.element = n;
  if (!s.contains(n)) return out;
  enumerate(s.generators(), n, [&](const std::vector<std::int64_t>& counts) {
    out.items.emplace_back(counts);
  });
  canonicalize(out.items);
  return out;
}

std::int64_t count_factorizations(const NumericalMonoid& s, std::int64_t n) {
  if (n < 0)
    throw Error(Errc::NegativeElement, std::to_string(n) + " is negative");
  if (!s.contains(n)) return 0;
  std::int64_t total = 0;
  enumerate(s.generators(), n, [&](const std::vector<std::int64_t>&) { ++total; });
  return total;
}

std::int64_t length(const Factorization& a) noexcept {
  return std::accumulate(a.counts.begin(), a.counts.end(), std::int64_t{0});
}

std::vector<std::int64_t> length_set(std::span<const Factorization> z) {
  if (z.empty()) throw Error(Errc::EmptySet, "no factorizations");
  std::vector<std::int64_t> lengths;
  lengths.reserve(z.size());
  for (const auto& a : z) lengths.push_back(length(a));
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  return lengths;
}

std::vector<std::int64_t> delta_set(std::span<const Factorization> z) {
  const auto lengths = length_set(z);
  std::set<std::int64_t> deltas;
  for (std::size_t i = 1; i < lengths.size(); ++i)
    deltas.insert(lengths[i] - lengths[i - 1]);
  return {deltas.begin(), deltas.end()};
}

namespace {

void require_same_dimension(const Factorization& a, const Factorization& b) {
  if (a.dimension() != b.dimension())
    throw Error(Errc::DimensionMismatch,
                std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
}

}  // namespace

Factorization gcd_fact(const Factorization& a, const Factorization& b) {
  require_same_dimension(a, b);
  std::vector<std::int64_t> m(a.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(a.counts[i], b.counts[i]);
  return Factorization(std::move(m));
}

std::int64_t distance_unchecked(const Factorization& a, const Factorization& b) noexcept {
  std::int64_t left = 0;
  std::int64_t right = 0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    const std::int64_t x = a.counts[i];
    const std::int64_t y = b.counts[i];
    if (x > y)
      left += x - y;
    else
      right += y - x;
  }
  return std::max(left, right);
}

std::int64_t distance(const Factorization& a, const Factorization& b) {
  require_same_dimension(a, b);
  return distance_unchecked(a, b);
}

}  // namespace catdeg
