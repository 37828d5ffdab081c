#include "catdeg/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "catdeg/blockmonoid.hpp"
#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"
#include "catdeg/factorization.hpp"
#include "catdeg/families.hpp"
#include "catdeg/kernels.hpp"
#include "catdeg/oracle.hpp"

namespace catdeg::verify {

namespace {

std::string gens_str(const NumericalMonoid& s) {
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 0; i < s.generators().size(); ++i)
    out << (i ? "," : "") << s.generators()[i];
  out << '>';
  return out.str();
}

std::string set_str(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

// Collects failure messages; the first few end up in the detail string.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  void count(std::size_t n = 1) { checked_ += n; }
  bool ok() const { return failures_ == 0; }

  CheckResult result(std::string name, std::string claim) const {
    std::ostringstream detail;
    detail << checked_ << " checked, " << failures_ << " failed";
    if (failures_) detail << ": " << messages_.str();
    return {std::move(name), std::move(claim), ok(), detail.str()};
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

std::vector<std::int64_t> windowed_cset(const NumericalMonoid& s) {
  return catenary_set_scan(s, default_scan_window(s)).cset;
}

}  // namespace

std::vector<NumericalMonoid> random_monoids(std::size_t count, std::size_t min_k,
                                            std::size_t max_k, std::int64_t max_gen,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_k(min_k, max_k);
  std::uniform_int_distribution<std::int64_t> pick_gen(2, max_gen);
  std::vector<NumericalMonoid> out;
  while (out.size() < count) {
    const std::size_t k = pick_k(rng);
    std::set<std::int64_t> gens;
    while (gens.size() < k) gens.insert(pick_gen(rng));
    const std::vector<std::int64_t> list(gens.begin(), gens.end());
    try {
      out.push_back(NumericalMonoid::create(list));
    } catch (const Error&) {
      // not minimal or not coprime; draw again
    }
  }
  return out;
}

CheckResult check_example_450() {
  Tally t;
  const auto s = NumericalMonoid::create({11, 36, 39});
  const auto z = factorizations(s, 450);
  t.count();
  if (!z.contains({6, 2, 8}) || !z.contains({24, 3, 2}))
    t.fail("Z(450) misses (6,2,8) or (24,3,2)");
  const auto c = catenary_degree(z);
  if (c != 16) t.fail("c(450) = " + std::to_string(c));
  if (oracle::catenary_threshold(z.items) != 16) t.fail("threshold oracle disagrees");
  if (distance({6, 2, 8}, {24, 3, 2}) != 19) t.fail("d((6,2,8),(24,3,2)) != 19");
  return t.result("example-450", "c(450) = 16 in <11,36,39>; Z(450) holds (6,2,8), (24,3,2)");
}

CheckResult check_example_11_25_29() {
  Tally t;
  const auto s = NumericalMonoid::create({11, 25, 29});
  const auto report = betti_elements(s);
  t.count();
  if (report.elements() != std::vector<std::int64_t>{58, 150, 154})
    t.fail("Betti = " + set_str(report.elements()));
  if (report.catenary_degrees() != std::vector<std::int64_t>{4, 12, 14})
    t.fail("Betti catenary degrees = " + set_str(report.catenary_degrees()));
  const auto c175 = catenary_degree(factorizations(s, 175));
  if (c175 != 11) t.fail("c(175) = " + std::to_string(c175));
  return t.result("example-11-25-29",
                  "<11,25,29>: Betti {58,150,154} with c = {4,12,14}; c(175) = 11");
}

CheckResult check_sandwich_sample(const std::vector<NumericalMonoid>& sample) {
  Tally t;
  for (const auto& s : sample) {
    const auto report = betti_elements(s);
    const auto stats = kernels::element_stats_parallel(s, 0, default_scan_window(s),
                                                       kernels::Compute::Catenary);
    for (const auto& st : stats) {
      if (st.num_factorizations < 2) continue;
      t.count();
      std::int64_t lo = -1;
      std::int64_t hi = -1;
      for (const auto& rec : report.betti) {
        if (!s.contains(st.element - rec.element)) continue;
        lo = lo < 0 ? rec.catenary : std::min(lo, rec.catenary);
        hi = std::max(hi, rec.catenary);
      }
      if (lo < 0 || st.catenary < lo || st.catenary > hi)
        t.fail(gens_str(s) + " n=" + std::to_string(st.element) + " c=" +
               std::to_string(st.catenary) + " bounds [" + std::to_string(lo) + "," +
               std::to_string(hi) + "]");
    }
  }
  return t.result("sandwich", "min c(b) <= c(n) <= max c(b) over Betti b dividing n");
}

CheckResult check_extremes_at_betti(const std::vector<NumericalMonoid>& sample) {
  Tally t;
  for (const auto& s : sample) {
    t.count();
    const auto betti_c = betti_elements(s).catenary_degrees();
    const std::set<std::int64_t> at_betti(betti_c.begin(), betti_c.end());
    const auto cset = windowed_cset(s);
    if (cset.size() < 2) {
      t.fail(gens_str(s) + " has no nonzero catenary degree in the window");
      continue;
    }
    if (!at_betti.count(cset[1]))
      t.fail(gens_str(s) + " min nonzero " + std::to_string(cset[1]) + " not at a Betti element");
    if (!at_betti.count(cset.back()))
      t.fail(gens_str(s) + " max " + std::to_string(cset.back()) + " not at a Betti element");
  }
  return t.result("extremes-at-betti",
                  "min nonzero and max of C(S) are catenary degrees of Betti elements");
}

CheckResult check_two_value_classification(const std::vector<NumericalMonoid>& sample) {
  Tally t;
  for (const auto& s : sample) {
    t.count();
    const auto betti_c = betti_elements(s).catenary_degrees();
    const std::set<std::int64_t> distinct(betti_c.begin(), betti_c.end());
    const auto cset = windowed_cset(s);
    const bool two_valued = cset.size() == 2;
    if (two_valued != (distinct.size() == 1))
      t.fail(gens_str(s) + " cset " + set_str(cset) + " vs Betti degrees " + set_str(betti_c));
    if (std::find(cset.begin(), cset.end(), 1) != cset.end())
      t.fail(gens_str(s) + " attains catenary degree 1");
  }
  return t.result("two-value-classification",
                  "C(S) = {0,c} iff all Betti elements have catenary degree c; 1 never occurs");
}

CheckResult check_betti_bound(const std::vector<NumericalMonoid>& sample, std::int64_t margin) {
  Tally t;
  for (const auto& s : sample) {
    const std::int64_t bound = s.betti_search_bound();
    for (const auto& st : kernels::element_stats_parallel(s, bound + 1, bound + margin,
                                                          kernels::Compute::Nabla)) {
      t.count();
      if (st.nabla_components >= 2)
        t.fail(gens_str(s) + " has Betti element " + std::to_string(st.element) +
               " past bound " + std::to_string(bound));
    }
  }
  return t.result("betti-bound", "no Betti element above F(S) + 2 n_k");
}

CheckResult check_arithmetic_family(std::int64_t k_max, std::int64_t c_max) {
  Tally t;
  for (std::int64_t k = 3; k <= k_max; ++k)
    for (std::int64_t c = 3; c <= c_max; ++c) {
      if (std::gcd(k, c - 2) != 1) continue;
      t.count();
      const auto p = arithmetic_family(k, c);
      const auto cset = windowed_cset(p.monoid);
      if (cset != p.predicted_cset_members)
        t.fail(gens_str(p.monoid) + " cset " + set_str(cset));
    }
  return t.result("arithmetic-family", "<k, k+(c-2), ..., k+(k-1)(c-2)> has C(S) = {0,2,c}");
}

CheckResult check_largecat_family(std::int64_t k_min, std::int64_t k_max) {
  Tally t;
  std::ostringstream extras;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    const auto p = largecat_family(k);
    const auto& s = p.monoid;
    const auto& g = s.generators();
    const auto report = betti_elements(s);
    t.count();
    std::vector<std::int64_t> predicted;
    for (const auto& b : p.predicted_betti) predicted.push_back(b.element);
    if (report.elements() != predicted)
      t.fail(gens_str(s) + " Betti " + set_str(report.elements()));
    for (const auto& b : p.predicted_betti) {
      const auto c = catenary_degree(factorizations(s, b.element));
      if (c != b.catenary)
        t.fail(gens_str(s) + " c(" + std::to_string(b.element) + ")=" + std::to_string(c));
      if (factorizations(s, b.element).size() != 2)
        t.fail(gens_str(s) + " Betti element " + std::to_string(b.element) +
               " lacks exactly two factorizations");
    }
    for (std::int64_t j = 0; j <= k - 2; ++j) {
      const auto& sp = p.special_elements[static_cast<std::size_t>(j)];
      const auto z = factorizations(s, sp.element);
      t.count();
      if (static_cast<std::int64_t>(z.size()) != sp.num_factorizations)
        t.fail(gens_str(s) + " |Z(s_" + std::to_string(j) + ")|=" + std::to_string(z.size()));
      const auto c = catenary_degree(z);
      if (c != sp.catenary)
        t.fail(gens_str(s) + " c(s_" + std::to_string(j) + ")=" + std::to_string(c));
      if (!z.contains({0, k + 1 + j, 0}))
        t.fail(gens_str(s) + " Z(s_" + std::to_string(j) + ") lacks (k+1+j) e_2");
      for (std::int64_t i = 1; i <= j + 1; ++i)
        if (!z.contains({3 * k - 1 - 3 * i, j + 1 - i, 2 * i - 1}))
          t.fail(gens_str(s) + " Z(s_" + std::to_string(j) + ") lacks a_" + std::to_string(i));
      if (g[0] * (3 * k - 1 - 3) + g[1] * j + g[2] != sp.element)
        t.fail("s_j formula inconsistent at k=" + std::to_string(k));
    }
    const auto cset = catenary_set_scan(s, prediction_window(p)).cset;
    for (std::int64_t m : p.predicted_cset_members)
      if (!std::binary_search(cset.begin(), cset.end(), m))
        t.fail(gens_str(s) + " cset misses " + std::to_string(m));
    std::vector<std::int64_t> extra;
    std::set_difference(cset.begin(), cset.end(), p.predicted_cset_members.begin(),
                        p.predicted_cset_members.end(), std::back_inserter(extra));
    if (!extra.empty()) extras << " k=" << k << ":" << set_str(extra);
  }
  auto r = t.result("largecat-family",
                    "<2k+1,6k-5,6k-1>: Betti (3k-1)n1,(k+1)n2,2n3; c(s_j) = 3k-3-j, |Z(s_j)| = j+2");
  if (!extras.str().empty()) r.detail += "; unpredicted values observed" + extras.str();
  return r;
}

CheckResult check_unique_betti_family() {
  Tally t;
  const std::vector<std::vector<std::int64_t>> prime_sets{{2, 3}, {2, 3, 5}, {2, 3, 5, 7}};
  for (const auto& primes : prime_sets) {
    t.count();
    const auto p = unique_betti_family(primes);
    const auto report = betti_elements(p.monoid);
    if (report.betti.size() != 1) {
      t.fail(gens_str(p.monoid) + " Betti " + set_str(report.elements()));
    } else if (report.betti[0].element != p.predicted_betti[0].element ||
               report.betti[0].catenary != p.predicted_betti[0].catenary) {
      t.fail(gens_str(p.monoid) + " Betti element " + std::to_string(report.betti[0].element) +
             " c=" + std::to_string(report.betti[0].catenary));
    }
    const auto cset = windowed_cset(p.monoid);
    if (cset != p.predicted_cset_members) t.fail(gens_str(p.monoid) + " cset " + set_str(cset));
  }
  return t.result("unique-betti-family",
                  "<P/p_k, ..., P/p_1> has one Betti element and C(S) = {0, p_k}");
}

CheckResult check_delta_remark() {
  Tally t;
  t.count();
  const auto s = NumericalMonoid::create({30, 52, 55});
  const auto report = betti_elements(s);
  if (report.elements() != std::vector<std::int64_t>{260, 330})
    t.fail("Betti " + set_str(report.elements()));
  const auto d260 = delta_set(factorizations(s, 260).items);
  const auto d330 = delta_set(factorizations(s, 330).items);
  if (d260 != std::vector<std::int64_t>{2}) t.fail("Delta(260) = " + set_str(d260));
  if (d330 != std::vector<std::int64_t>{5}) t.fail("Delta(330) = " + set_str(d330));
  const auto ds = kernels::delta_union_parallel(s, default_scan_window(s));
  if (ds != std::vector<std::int64_t>{1, 2, 3, 5}) t.fail("Delta(S) window = " + set_str(ds));
  return t.result("delta-remark",
                  "<30,52,55>: Betti {260,330}, Delta(260)={2}, Delta(330)={5}, Delta(S)={1,2,3,5}");
}

CheckResult check_block_monoid(int n_min, int n_max) {
  Tally t;
  for (int n = n_min; n <= n_max; ++n) {
    t.count();
    std::vector<std::int64_t> expected{0};
    for (int c = 2; c <= n; ++c) expected.push_back(c);
    const auto sample = catenary_set_sample(n, 2 * n);
    if (sample != expected)
      t.fail("Z_" + std::to_string(n) + " sample " + set_str(sample));
    const AtomTable table = atoms(n);
    for (int j = 2; j <= n; ++j) {
      const auto a = theorem_fullset_witness(n, j);
      const auto c = catenary_degree(factorizations_block_compact(table, a));
      if (c != j)
        t.fail("Z_" + std::to_string(n) + " witness j=" + std::to_string(j) +
               " has c=" + std::to_string(c));
      if (j >= 3 && j < n) {
        std::size_t dividing = 0;
        for (const auto& atom : table.atoms) dividing += atom.divides(a) ? 1 : 0;
        if (dividing != 4)
          t.fail("Z_" + std::to_string(n) + " witness j=" + std::to_string(j) + " has " +
                 std::to_string(dividing) + " dividing atoms");
      }
    }
    if (n == 4) {
      const auto u = ZeroSumSequence::create(4, {0, 4, 0, 0});
      const auto v = ZeroSumSequence::create(4, {0, 2, 1, 0});
      const auto w = ZeroSumSequence::create(4, {0, 0, 2, 0});
      std::vector<std::int64_t> uw(table.atoms.size(), 0);
      std::vector<std::int64_t> v2(table.atoms.size(), 0);
      uw[static_cast<std::size_t>(table.index_of(u))] = 1;
      uw[static_cast<std::size_t>(table.index_of(w))] = 1;
      v2[static_cast<std::size_t>(table.index_of(v))] = 2;
      std::vector<Factorization> expected_z{Factorization(uw), Factorization(v2)};
      canonicalize(expected_z);
      if (factorizations_block(table, theorem_fullset_witness(4, 2)).items != expected_z)
        t.fail("Z_4 witness j=2 is not {UW, V^2}");
    }
  }
  return t.result("block-monoid", "B(Z_n) attains {0,2,...,n}; witnesses have c = j");
}

CheckResult check_catenary_oracle(std::size_t sets, std::uint64_t seed) {
  Tally t;
  const auto pool = random_monoids(40, 2, 4, 60, seed);
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<std::size_t> pick_monoid(0, pool.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_n(0, 600);
  std::size_t done = 0;
  while (done < sets) {
    const auto& s = pool[pick_monoid(rng)];
    const std::int64_t n = pick_n(rng);
    if (count_factorizations(s, n) < 2 || count_factorizations(s, n) > 300) continue;
    const auto z = factorizations(s, n);
    ++done;
    t.count();
    const auto fast = catenary_degree(z);
    const auto slow = oracle::catenary_threshold(z.items);
    if (fast != slow)
      t.fail(gens_str(s) + " n=" + std::to_string(n) + ": " + std::to_string(fast) +
             " vs " + std::to_string(slow));
  }
  return t.result("catenary-oracle", "union-find bottleneck equals threshold connectivity");
}

CheckResult check_factorization_oracle(std::size_t monoids, std::size_t elements_per_monoid,
                                       std::uint64_t seed) {
  Tally t;
  const auto pool = random_monoids(monoids, 1, 4, 60, seed);
  std::mt19937_64 rng(seed + 2);
  std::uniform_int_distribution<std::int64_t> pick_n(0, 500);
  for (const auto& s : pool) {
    for (std::size_t e = 0; e < elements_per_monoid; ++e) {
      const std::int64_t n = e == 0 ? 500 : pick_n(rng);
      t.count();
      if (factorizations(s, n).items != oracle::factorizations_nested(s.generators(), n))
        t.fail(gens_str(s) + " n=" + std::to_string(n));
    }
  }
  return t.result("factorization-oracle", "DFS enumeration equals naive nested loops");
}

CheckResult check_cini_oracle(std::size_t monoids, std::uint64_t seed) {
  Tally t;
  for (const auto& s : random_monoids(monoids, 3, 3, 60, seed)) {
    t.count();
    const auto candidates = betti_via_cini(s);
    for (std::int64_t b : betti_elements(s).elements())
      if (!std::binary_search(candidates.begin(), candidates.end(), b))
        t.fail(gens_str(s) + " Betti element " + std::to_string(b) + " not of form c_i n_i");
  }
  return t.result("cini-oracle", "every Betti element of <n1,n2,n3> is some c_i n_i");
}

CheckResult check_membership_oracle(std::size_t pairs, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(2, 60);
  std::size_t done = 0;
  while (done < pairs) {
    std::int64_t a = pick(rng);
    std::int64_t b = pick(rng);
    if (a == b || std::gcd(a, b) != 1) continue;
    if (a > b) std::swap(a, b);
    ++done;
    const auto s = NumericalMonoid::create({a, b});
    const std::vector<std::int64_t> gens{a, b};
    for (std::int64_t n = -10; n <= a * b; ++n) {
      t.count();
      const bool by_apery = s.contains(n);
      if (by_apery != membership_criterion_2gen(a, b, n) ||
          by_apery != oracle::contains_brute(gens, n))
        t.fail(gens_str(s) + " n=" + std::to_string(n));
    }
  }
  return t.result("membership-oracle",
                  "Apery membership equals the two-generator criterion and brute force");
}

CheckResult check_distance_axioms(std::size_t instances, std::uint64_t seed) {
  Tally t;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_dim(1, 5);
  std::uniform_int_distribution<std::int64_t> pick_count(0, 12);
  auto random_fact = [&](std::size_t dim) {
    std::vector<std::int64_t> v(dim);
    for (auto& x : v) x = pick_count(rng);
    return Factorization(std::move(v));
  };
  auto plus = [](const Factorization& x, const Factorization& y) {
    std::vector<std::int64_t> v(x.dimension());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = x.counts[i] + y.counts[i];
    return Factorization(std::move(v));
  };

  const auto pool = random_monoids(30, 2, 4, 40, seed + 3);
  std::uniform_int_distribution<std::size_t> pick_monoid(0, pool.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_n(0, 400);

  for (std::size_t i = 0; i < instances; ++i) {
    t.count();
    const std::size_t dim = pick_dim(rng);
    const auto a = random_fact(dim);
    const auto b = (i % 7 == 0) ? a : random_fact(dim);
    const auto c = random_fact(dim);
    const auto dab = distance(a, b);
    if (dab != distance(b, a)) t.fail("asymmetric");
    if ((dab == 0) != (a == b)) t.fail("identity of indiscernibles");
    if (distance(plus(a, c), plus(b, c)) != dab) t.fail("translation");
    if (distance(a, c) > dab + distance(b, c)) t.fail("triangle");

    // two distinct factorizations of one element
    while (true) {
      const auto& s = pool[pick_monoid(rng)];
      const std::int64_t n = pick_n(rng);
      if (count_factorizations(s, n) < 2) continue;
      const auto z = factorizations(s, n);
      std::uniform_int_distribution<std::size_t> pick_item(0, z.size() - 1);
      const std::size_t x = pick_item(rng);
      std::size_t y = pick_item(rng);
      if (x == y) y = (y + 1) % z.size();
      if (distance(z.items[x], z.items[y]) < 2)
        t.fail(gens_str(s) + " n=" + std::to_string(n) + " has factorizations at distance 1");
      break;
    }
  }
  return t.result("distance-axioms",
                  "symmetry, identity, translation invariance, triangle, d >= 2 within Z(n)");
}

std::vector<CheckResult> run_default_suite(const SuiteOptions& options) {
  const auto sample = random_monoids(options.random_monoids, 3, 4, 60, options.seed);
  std::vector<CheckResult> out;
  out.push_back(check_example_450());
  out.push_back(check_example_11_25_29());
  out.push_back(check_sandwich_sample(sample));
  out.push_back(check_extremes_at_betti(sample));
  out.push_back(check_two_value_classification(sample));
  out.push_back(check_betti_bound(sample, 500));
  out.push_back(check_arithmetic_family(5, 6));
  out.push_back(check_largecat_family(3, options.k_max));
  out.push_back(check_unique_betti_family());
  out.push_back(check_delta_remark());
  out.push_back(check_block_monoid(4, 6));
  out.push_back(check_catenary_oracle(1000, options.seed + 10));
  out.push_back(check_factorization_oracle(12, 40, options.seed + 11));
  out.push_back(check_cini_oracle(100, options.seed + 12));
  out.push_back(check_membership_oracle(20, options.seed + 13));
  out.push_back(check_distance_axioms(10000, options.seed + 14));
  return out;
}

}  // namespace catdeg::verify
