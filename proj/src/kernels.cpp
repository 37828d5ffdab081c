#include "catdeg/kernels.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"

namespace catdeg::kernels {

namespace {

bool wants(Compute what, Compute bit) {
  return (static_cast<unsigned>(what) & static_cast<unsigned>(bit)) != 0;
}

ElementStats stats_of(const NumericalMonoid& s, std::int64_t n, Compute what) {
  ElementStats st;
  st.element = n;
  if (n < 0 || !s.contains(n)) return st;
  const FactorizationSet z = factorizations(s, n);
  st.num_factorizations = static_cast<std::int64_t>(z.size());
  if (wants(what, Compute::Catenary)) st.catenary = catenary_degree(z);
  if (wants(what, Compute::Nabla)) st.nabla_components = nabla_components(z);
  return st;
}

void check_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi + 1) throw Error(Errc::BadParameters, "empty or inverted range");
}

}  // namespace

std::vector<ElementStats> element_stats_serial(const NumericalMonoid& s, std::int64_t lo,
                                               std::int64_t hi, Compute what) {
  check_range(lo, hi);
  std::vector<ElementStats> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(stats_of(s, n, what));
  return out;
}

std::vector<ElementStats> element_stats_parallel(const NumericalMonoid& s, std::int64_t lo,
                                                 std::int64_t hi, Compute what) {
  check_range(lo, hi);
  const std::int64_t count = hi - lo + 1;
  std::vector<ElementStats> out(static_cast<std::size_t>(count));
  // Cost grows with n, so hand out small chunks.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = stats_of(s, lo + i, what);
  return out;
}

namespace {

std::vector<std::int64_t> deltas_of(const NumericalMonoid& s, std::int64_t n) {
  if (!s.contains(n)) return {};
  const FactorizationSet z = factorizations(s, n);
  return delta_set(z.items);
}

}  // namespace

std::vector<std::int64_t> delta_union_serial(const NumericalMonoid& s, std::int64_t window) {
  std::set<std::int64_t> all;
  for (std::int64_t n = 0; n <= window; ++n)
    for (std::int64_t d : deltas_of(s, n)) all.insert(d);
  return {all.begin(), all.end()};
}

std::vector<std::int64_t> delta_union_parallel(const NumericalMonoid& s, std::int64_t window) {
  const std::int64_t count = window + 1;
  std::vector<std::vector<std::int64_t>> per(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t n = 0; n < count; ++n) per[static_cast<std::size_t>(n)] = deltas_of(s, n);
  std::set<std::int64_t> all;
  for (const auto& ds : per) all.insert(ds.begin(), ds.end());
  return {all.begin(), all.end()};
}

std::vector<std::int64_t> catenary_many_serial(std::span<const std::vector<Factorization>> sets) {
  std::vector<std::int64_t> out;
  out.reserve(sets.size());
  for (const auto& z : sets) out.push_back(catenary_degree(z));
  return out;
}

std::vector<std::int64_t> catenary_many_parallel(
    std::span<const std::vector<Factorization>> sets) {
  std::vector<std::int64_t> out(sets.size());
  const auto count = static_cast<std::int64_t>(sets.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = catenary_degree(sets[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(catdeg_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace catdeg::kernels
