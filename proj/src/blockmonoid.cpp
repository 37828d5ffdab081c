#include "catdeg/blockmonoid.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"

namespace catdeg {

ZeroSumSequence ZeroSumSequence::create(int order, std::vector<std::int64_t> multiplicity) {
  if (order < 1) throw Error(Errc::OrderTooSmall, "group order must be positive");
  if (multiplicity.size() != static_cast<std::size_t>(order))
    throw Error(Errc::BadParameters, "need one multiplicity per group element");
  std::int64_t sum = 0;
  for (std::size_t g = 0; g < multiplicity.size(); ++g) {
    if (multiplicity[g] < 0) throw Error(Errc::BadParameters, "negative multiplicity");
    sum = (sum + static_cast<std::int64_t>(g) * (multiplicity[g] % order)) % order;
  }
  if (sum != 0)
    throw Error(Errc::NotZeroSum, "elements sum to " + std::to_string(sum) + " mod " +
                                      std::to_string(order));
  ZeroSumSequence s;
  s.order_ = order;
  s.mult_ = std::move(multiplicity);
  return s;
}

std::int64_t ZeroSumSequence::length() const noexcept {
  return std::accumulate(mult_.begin(), mult_.end(), std::int64_t{0});
}

bool ZeroSumSequence::divides(const ZeroSumSequence& other) const noexcept {
  if (order_ != other.order_) return false;
  for (std::size_t g = 0; g < mult_.size(); ++g)
    if (mult_[g] > other.mult_[g]) return false;
  return true;
}

std::ptrdiff_t AtomTable::index_of(const ZeroSumSequence& a) const {
  auto it = std::find(atoms.begin(), atoms.end(), a);
  return it == atoms.end() ? -1 : it - atoms.begin();
}

bool is_minimal_zero_sum(const ZeroSumSequence& a) {
  const int n = a.order();
  const std::int64_t len = a.length();
  if (len == 0) return false;
  // reach[c] = bitmask of residues hit by some sub-multiset of size c
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(len) + 1, 0);
  reach[0] = 1;
  for (int g = 0; g < n; ++g) {
    for (std::int64_t copy = 0; copy < a[g]; ++copy) {
      for (std::int64_t c = len; c >= 1; --c) {
        const std::uint64_t prev = reach[static_cast<std::size_t>(c - 1)];
        std::uint64_t shifted = 0;
        for (int r = 0; r < n; ++r)
          if (prev >> r & 1U) shifted |= std::uint64_t{1} << ((r + g) % n);
        reach[static_cast<std::size_t>(c)] |= shifted;
      }
    }
  }
  for (std::int64_t c = 1; c < len; ++c)
    if (reach[static_cast<std::size_t>(c)] & 1U) return false;
  return true;
}

namespace {

// Calls visit on every zero-sum multiplicity vector of length <= max_length.
template <class Visit>
void for_each_zero_sum(int n, std::int64_t max_length, Visit&& visit) {
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int g, std::int64_t budget, int sum) -> void {
    if (g == n) {
      if (sum == 0) visit(mult);
      return;
    }
    for (std::int64_t m = 0; m <= budget; ++m) {
      mult[static_cast<std::size_t>(g)] = m;
      self(self, g + 1, budget - m, static_cast<int>((sum + g * (m % n)) % n));
    }
    mult[static_cast<std::size_t>(g)] = 0;
  };
  recurse(recurse, 0, max_length, 0);
}

}  // namespace

AtomTable atoms(int n) {
  if (n < 3) throw Error(Errc::OrderTooSmall, "block monoids need |G| >= 3");
  if (n > kMaxBlockOrder)
    throw Error(Errc::OrderTooLarge, "order capped at " + std::to_string(kMaxBlockOrder));
  AtomTable table;
  table.order = n;
  for_each_zero_sum(n, n + 1, [&](const std::vector<std::int64_t>& mult) {
    auto seq = ZeroSumSequence::create(n, mult);
    if (!is_minimal_zero_sum(seq)) return;
    if (seq.length() > n)
      throw std::logic_error("minimal zero-sum sequence longer than the group order");
    table.atoms.push_back(std::move(seq));
  });
  std::sort(table.atoms.begin(), table.atoms.end(),
            [](const ZeroSumSequence& a, const ZeroSumSequence& b) {
              const auto la = a.length();
              const auto lb = b.length();
              if (la != lb) return la < lb;
              return a.multiplicity() < b.multiplicity();
            });
  return table;
}

namespace {

// Enumerates factorizations of `target` over `candidates` (indices into
// table.atoms). Every factorization is generated exactly once: the smallest
// group element still present fixes which atoms must be used next, and those
// atoms are chosen as a non-increasing run of candidate positions.
std::vector<Factorization> factor_over(const AtomTable& table,
                                       const std::vector<std::size_t>& candidates,
                                       const ZeroSumSequence& target) {
  const int n = table.order;
  const std::size_t dim = candidates.size();
  std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < dim; ++c)
    for (int g = 0; g < n; ++g)
      if (table.atoms[candidates[c]][g] > 0) containing[static_cast<std::size_t>(g)].push_back(c);

  std::vector<std::int64_t> rest = target.multiplicity();
  std::vector<std::int64_t> counts(dim, 0);
  std::vector<Factorization> out;

  auto fits = [&](std::size_t c) {
    const auto& m = table.atoms[candidates[c]].multiplicity();
    for (std::size_t g = 0; g < m.size(); ++g)
      if (m[g] > rest[g]) return false;
    return true;
  };
  auto apply = [&](std::size_t c, std::int64_t sign) {
    const auto& m = table.atoms[candidates[c]].multiplicity();
    for (std::size_t g = 0; g < m.size(); ++g) rest[g] -= sign * m[g];
    counts[c] += sign;
  };

  // outer: pick the smallest element g still present
  // inner: cover every copy of g using atoms containing g, positions <= bound
  auto outer = [&](auto&& self_outer) -> void {
    int g = 0;
    while (g < n && rest[static_cast<std::size_t>(g)] == 0) ++g;
    if (g == n) {
      out.emplace_back(counts);
      return;
    }
    const auto& pool = containing[static_cast<std::size_t>(g)];
    auto inner = [&](auto&& self_inner, std::size_t bound) -> void {
      if (rest[static_cast<std::size_t>(g)] == 0) {
        self_outer(self_outer);
        return;
      }
      for (std::size_t p = bound; p-- > 0;) {
        const std::size_t c = pool[p];
        if (!fits(c)) continue;
        apply(c, 1);
        self_inner(self_inner, p + 1);
        apply(c, -1);
      }
    };
    inner(inner, pool.size());
  };
  outer(outer);
  canonicalize(out);
  return out;
}

void require_same_group(const AtomTable& table, const ZeroSumSequence& a) {
  if (a.order() != table.order)
    throw Error(Errc::GroupMismatch, "sequence over Z_" + std::to_string(a.order()) +
                                         ", atoms over Z_" + std::to_string(table.order));
}

std::vector<std::size_t> dividing_atoms(const AtomTable& table, const ZeroSumSequence& a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < table.atoms.size(); ++i)
    if (table.atoms[i].divides(a)) idx.push_back(i);
  return idx;
}

}  // namespace

std::vector<Factorization> factorizations_block_compact(const AtomTable& table,
                                                        const ZeroSumSequence& a) {
  require_same_group(table, a);
  return factor_over(table, dividing_atoms(table, a), a);
}

BlockFactorizationSet factorizations_block(const AtomTable& table, const ZeroSumSequence& a) {
  require_same_group(table, a);
  const auto idx = dividing_atoms(table, a);
  BlockFactorizationSet out{a, {}};
  for (const auto& f : factor_over(table, idx, a)) {
    std::vector<std::int64_t> full(table.atoms.size(), 0);
    for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = f.counts[c];
    out.items.emplace_back(std::move(full));
  }
  canonicalize(out.items);
  return out;
}

ZeroSumSequence theorem_fullset_witness(int n, int j) {
  if (n < 4 || j < 2 || j > n)
    throw Error(Errc::BadParameters, "witness needs n >= 4 and 2 <= j <= n");
  std::vector<std::int64_t> mult(static_cast<std::size_t>(n), 0);
  if (j == 2) {
    mult[2] += 2;
    mult[1] += 2 * n - 4;
  } else {
    mult[static_cast<std::size_t>(n - 1)] += j - 1;
    mult[1] += n;
    mult[static_cast<std::size_t>(j - 1)] += 1;
  }
  return ZeroSumSequence::create(n, std::move(mult));
}

std::vector<ZeroSumSequence> zero_sum_sequences(int n, std::int64_t max_length) {
  std::vector<ZeroSumSequence> out;
  if (max_length < 0) return out;
  for_each_zero_sum(n, max_length, [&](const std::vector<std::int64_t>& mult) {
    out.push_back(ZeroSumSequence::create(n, mult));
  });
  return out;
}

namespace {

void check_sample_args(int n, std::int64_t max_length) {
  if (n < 3) throw Error(Errc::OrderTooSmall, "block monoids need |G| >= 3");
  if (n > kMaxSampleOrder)
    throw Error(Errc::OrderTooLarge,
                "sampling capped at order " + std::to_string(kMaxSampleOrder));
  if (max_length < 0 || max_length > 3 * n)
    throw Error(Errc::BadParameters, "max_length must lie in [0, 3n]");
}

std::int64_t sequence_catenary(const AtomTable& table, const ZeroSumSequence& a) {
  if (a.empty()) return 0;
  return catenary_degree(factorizations_block_compact(table, a));
}

std::vector<std::int64_t> collect(const std::vector<std::int64_t>& values) {
  std::set<std::int64_t> s(values.begin(), values.end());
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::int64_t> catenary_set_sample_serial(int n, std::int64_t max_length) {
  check_sample_args(n, max_length);
  const AtomTable table = atoms(n);
  const auto seqs = zero_sum_sequences(n, max_length);
  std::vector<std::int64_t> values;
  values.reserve(seqs.size());
  for (const auto& a : seqs) values.push_back(sequence_catenary(table, a));
  return collect(values);
}

std::vector<std::int64_t> catenary_set_sample(int n, std::int64_t max_length) {
  check_sample_args(n, max_length);
  const AtomTable table = atoms(n);
  const auto seqs = zero_sum_sequences(n, max_length);
  std::vector<std::int64_t> values(seqs.size());
  const auto count = static_cast<std::int64_t>(seqs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      values[static_cast<std::size_t>(i)] =
          sequence_catenary(table, seqs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(catdeg_block_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return collect(values);
}

}  // namespace catdeg
