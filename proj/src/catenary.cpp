#include "catdeg/catenary.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "catdeg/error.hpp"
#include "catdeg/kernels.hpp"

namespace catdeg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

constexpr std::size_t kEdgeBudget = std::size_t{1} << 22;

}  // namespace

std::int64_t catenary_degree(std::span<const Factorization> z) {
  if (z.empty()) throw Error(Errc::EmptySet, "no factorizations");
  const std::size_t m = z.size();
  if (m == 1) return 0;

  // Edges of the complete graph are inserted in ascending weight. Only the
  // weights of one phase are held in memory at a time, so large Z(n) (tens of
  // thousands of factorizations) stay within kEdgeBudget edges.
  std::int64_t max_weight = 0;
  for (const auto& a : z) max_weight = std::max(max_weight, length(a));
  std::vector<std::size_t> count(static_cast<std::size_t>(max_weight) + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      ++count[static_cast<std::size_t>(distance_unchecked(z[i], z[j]))];

  DisjointSets dsu(m);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::size_t lo = 0;
  while (lo < count.size()) {
    std::size_t hi = lo;  // phase covers weights [lo, hi]
    std::size_t total = count[lo];
    while (hi + 1 < count.size() && total + count[hi + 1] <= kEdgeBudget) total += count[++hi];

    std::vector<std::size_t> fill(hi - lo + 2, 0);
    for (std::size_t w = lo; w <= hi; ++w) fill[w - lo + 1] = fill[w - lo] + count[w];
    edges.resize(total);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto w = static_cast<std::size_t>(distance_unchecked(z[i], z[j]));
        if (w < lo || w > hi) continue;
        edges[fill[w - lo]++] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      }
    // fill[w - lo] now marks the end of bucket w
    std::size_t e = 0;
    for (std::size_t w = lo; w <= hi; ++w)
      for (; e < fill[w - lo]; ++e)
        if (dsu.unite(edges[e].first, edges[e].second) && dsu.components() == 1)
          return static_cast<std::int64_t>(w);
    lo = hi + 1;
  }
  return max_weight;  // unreachable: the complete graph is connected
}

bool verify_nchain(const FactorizationSet& z, std::span<const Factorization> chain,
                   std::int64_t n) {
  if (chain.empty()) throw Error(Errc::BadParameters, "empty chain");
  for (const auto& a : chain)
    if (!z.contains(a))
      throw Error(Errc::FactorizationNotInSet,
                  "chain member is not a factorization of " + std::to_string(z.element));
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (distance(chain[i - 1], chain[i]) > n) return false;
  return true;
}

std::int64_t nabla_components(std::span<const Factorization> z) {
  if (z.empty()) throw Error(Errc::EmptySet, "no factorizations");
  DisjointSets dsu(z.size());
  const std::size_t k = z.front().dimension();
  std::vector<std::size_t> owner(k, z.size());
  for (std::size_t idx = 0; idx < z.size(); ++idx)
    for (std::size_t atom = 0; atom < k; ++atom) {
      if (z[idx].counts[atom] == 0) continue;
      if (owner[atom] == z.size())
        owner[atom] = idx;
      else
        dsu.unite(owner[atom], idx);
    }
  return static_cast<std::int64_t>(dsu.components());
}

std::vector<std::int64_t> BettiReport::elements() const {
  std::vector<std::int64_t> out;
  for (const auto& r : betti) out.push_back(r.element);
  return out;
}

std::vector<std::int64_t> BettiReport::catenary_degrees() const {
  std::vector<std::int64_t> out;
  for (const auto& r : betti) out.push_back(r.catenary);
  return out;
}

BettiReport betti_elements(const NumericalMonoid& s) {
  BettiReport report{s, {}, s.betti_search_bound()};
  const auto stats =
      kernels::element_stats_parallel(s, 1, report.search_bound, kernels::Compute::Nabla);
  for (const auto& st : stats) {
    if (st.nabla_components < 2) continue;
    BettiRecord rec;
    rec.element = st.element;
    rec.factorizations = factorizations(s, st.element);
    rec.catenary = catenary_degree(rec.factorizations);
    rec.components = st.nabla_components;
    report.betti.push_back(std::move(rec));
  }
  return report;
}

std::vector<std::int64_t> betti_via_cini(const NumericalMonoid& s) {
  if (s.embedding_dimension() != 3)
    throw Error(Errc::NotEmbeddingDimension3,
                "monoid has " + std::to_string(s.embedding_dimension()) + " generators");
  const auto& g = s.generators();
  auto in_span_of = [](std::int64_t x, std::int64_t p, std::int64_t q) {
    for (std::int64_t a = 0; a * p <= x; ++a)
      if ((x - a * p) % q == 0) return true;
    return false;
  };
  std::set<std::int64_t> values;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::int64_t p = g[(i + 1) % 3];
    const std::int64_t q = g[(i + 2) % 3];
    std::int64_t c = 1;
    while (!in_span_of(c * g[i], p, q)) ++c;
    values.insert(c * g[i]);
  }
  return {values.begin(), values.end()};
}

std::vector<std::int64_t> dividing_betti(const NumericalMonoid& s,
                                         const BettiReport& report, std::int64_t n) {
  if (!s.contains(n))
    throw Error(Errc::NotAnElement, std::to_string(n) + " is not in the monoid");
  std::vector<std::int64_t> out;
  for (const auto& rec : report.betti)
    if (s.contains(n - rec.element)) out.push_back(rec.element);
  return out;
}

SandwichCheck check_sandwich(const NumericalMonoid& s, const BettiReport& report,
                             std::int64_t n) {
  if (!s.contains(n))
    throw Error(Errc::NotAnElement, std::to_string(n) + " is not in the monoid");
  SandwichCheck out;
  out.catenary = catenary_degree(factorizations(s, n));
  if (out.catenary == 0)
    throw Error(Errc::UniqueFactorization, std::to_string(n) + " factors uniquely");
  bool any = false;
  for (const auto& rec : report.betti) {
    if (!s.contains(n - rec.element)) continue;
    out.lower = any ? std::min(out.lower, rec.catenary) : rec.catenary;
    out.upper = any ? std::max(out.upper, rec.catenary) : rec.catenary;
    any = true;
  }
  out.ok = any && out.lower <= out.catenary && out.catenary <= out.upper;
  return out;
}

CatenaryScan catenary_set_scan(const NumericalMonoid& s, std::int64_t window) {
  if (window < 0)
    throw Error(Errc::BadParameters, "window must be nonnegative");
  CatenaryScan out;
  std::set<std::int64_t> values;
  for (const auto& st :
       kernels::element_stats_parallel(s, 0, window, kernels::Compute::Catenary)) {
    if (st.num_factorizations == 0) continue;
    out.per_element.emplace(st.element, st.catenary);
    values.insert(st.catenary);
  }
  out.cset.assign(values.begin(), values.end());
  return out;
}

std::int64_t default_scan_window(const NumericalMonoid& s) noexcept {
  return s.betti_search_bound() + 200;
}

}  // namespace catdeg
