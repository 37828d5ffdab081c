#include "catdeg/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace catdeg::oracle {

bool contains_brute(std::span<const std::int64_t> gens, std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  // reachable[m] over [0, n], one generator at a time
  std::vector<char> reachable(static_cast<std::size_t>(n) + 1, 0);
  reachable[0] = 1;
  for (std::int64_t g : gens)
    for (std::int64_t m = g; m <= n; ++m)
      if (reachable[static_cast<std::size_t>(m - g)]) reachable[static_cast<std::size_t>(m)] = 1;
  return reachable[static_cast<std::size_t>(n)] != 0;
}

std::vector<Factorization> factorizations_nested(std::span<const std::int64_t> gens,
                                                 std::int64_t n) {
  std::vector<Factorization> out;
  if (n < 0 || gens.empty()) return out;
  const std::size_t k = gens.size();
  std::vector<std::int64_t> a(k, 0);
  // odometer over coordinates 0..k-2, each from 0 to n / gens[i]
  while (true) {
    std::int64_t partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) partial += a[i] * gens[i];
    if (partial <= n && (n - partial) % gens[k - 1] == 0) {
      auto full = a;
      full[k - 1] = (n - partial) / gens[k - 1];
      out.emplace_back(std::move(full));
    }
    std::size_t i = 0;
    while (i + 1 < k) {
      if (++a[i] <= n / gens[i]) break;
      a[i] = 0;
      ++i;
    }
    if (i + 1 >= k) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Adjacent>
std::size_t count_components(std::size_t m, Adjacent&& adjacent) {
  std::vector<char> seen(m, 0);
  std::size_t components = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v = 0; v < m; ++v)
        if (!seen[v] && adjacent(u, v)) {
          seen[v] = 1;
          q.push(v);
        }
    }
  }
  return components;
}

std::int64_t plain_distance(const Factorization& a, const Factorization& b) {
  std::int64_t left = 0;
  std::int64_t right = 0;
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    const std::int64_t g = std::min(a.counts[i], b.counts[i]);
    left += a.counts[i] - g;
    right += b.counts[i] - g;
  }
  return std::max(left, right);
}

}  // namespace

std::int64_t catenary_threshold(std::span<const Factorization> z) {
  const std::size_t m = z.size();
  if (m <= 1) return 0;
  std::set<std::int64_t> weights;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) weights.insert(plain_distance(z[i], z[j]));
  for (std::int64_t n : weights) {
    const auto components = count_components(
        m, [&](std::size_t u, std::size_t v) { return plain_distance(z[u], z[v]) <= n; });
    if (components == 1) return n;
  }
  return *weights.rbegin();
}

std::int64_t nabla_components_bfs(std::span<const Factorization> z) {
  return static_cast<std::int64_t>(count_components(z.size(), [&](std::size_t u, std::size_t v) {
    for (std::size_t i = 0; i < z[u].counts.size(); ++i)
      if (std::min(z[u].counts[i], z[v].counts[i]) > 0) return true;
    return false;
  }));
}

bool minimal_zero_sum_brute(int n, std::span<const std::int64_t> mult) {
  std::int64_t total = 0;
  for (auto m : mult) total += m;
  if (total == 0) return false;
  std::vector<std::int64_t> pick(mult.size(), 0);
  while (true) {
    std::size_t i = 0;
    while (i < pick.size()) {
      if (++pick[i] <= mult[i]) break;
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
    std::int64_t size = 0;
    std::int64_t sum = 0;
    for (std::size_t g = 0; g < pick.size(); ++g) {
      size += pick[g];
      sum += static_cast<std::int64_t>(g) * pick[g];
    }
    if (size > 0 && size < total && sum % n == 0) return false;
  }
  return true;
}

std::size_t atom_count_brute(int n) {
  std::size_t count = 0;
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int g, std::int64_t budget) -> void {
    if (g == n) {
      std::int64_t sum = 0;
      for (int h = 0; h < n; ++h) sum += h * mult[static_cast<std::size_t>(h)];
      if (sum % n == 0 && minimal_zero_sum_brute(n, mult)) ++count;
      return;
    }
    for (std::int64_t m = 0; m <= budget; ++m) {
      mult[static_cast<std::size_t>(g)] = m;
      self(self, g + 1, budget - m);
    }
    mult[static_cast<std::size_t>(g)] = 0;
  };
  rec(rec, 0, n);
  return count;
}

}  // namespace catdeg::oracle
