#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"
#include "catdeg/oracle.hpp"
#include "catdeg/verify.hpp"

using catdeg::Errc;
using catdeg::Factorization;
using catdeg::NumericalMonoid;

TEST_CASE("catenary degree of 450 in <11,36,39>") {
  const auto s = NumericalMonoid::create({11, 36, 39});
  const auto z = catdeg::factorizations(s, 450);
  CHECK(catdeg::catenary_degree(z) == 16);
  CHECK(catdeg::catenary_degree(catdeg::factorizations(s, 11)) == 0);
  CHECK(catdeg::catenary_degree(catdeg::factorizations(s, 0)) == 0);
}

TEST_CASE("catenary degree of 175 in <11,25,29>") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  CHECK(catdeg::catenary_degree(catdeg::factorizations(s, 175)) == 11);
}

TEST_CASE("catenary degree of an empty set throws") {
  try {
    catdeg::catenary_degree(std::vector<Factorization>{});
    FAIL("expected EmptySet");
  } catch (const catdeg::Error& e) {
    CHECK(e.code() == Errc::EmptySet);
  }
}

TEST_CASE("N-chains in Z(450)") {
  const auto s = NumericalMonoid::create({11, 36, 39});
  const auto z = catdeg::factorizations(s, 450);
  // bottleneck path between the two highlighted factorizations
  const std::vector<Factorization> chain{{6, 2, 8}, {9, 0, 9}, {18, 7, 0}, {24, 3, 2}};
  CHECK(catdeg::verify_nchain(z, chain, 16));
  CHECK_FALSE(catdeg::verify_nchain(z, chain, 15));
  CHECK(catdeg::verify_nchain(z, std::vector<Factorization>{{6, 2, 8}}, 0));
  const std::vector<Factorization> direct{{6, 2, 8}, {24, 3, 2}};
  CHECK_FALSE(catdeg::verify_nchain(z, direct, 18));
  CHECK(catdeg::verify_nchain(z, direct, 19));

  const std::vector<Factorization> stranger{{6, 2, 8}, {1, 1, 1}};
  try {
    catdeg::verify_nchain(z, stranger, 100);
    FAIL("expected FactorizationNotInSet");
  } catch (const catdeg::Error& e) {
    CHECK(e.code() == Errc::FactorizationNotInSet);
  }
}

TEST_CASE("gcd graph components") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  CHECK(catdeg::nabla_components(catdeg::factorizations(s, 58)) == 2);
  CHECK(catdeg::nabla_components(catdeg::factorizations(s, 25)) == 1);
  const auto t = NumericalMonoid::create({11, 36, 39});
  CHECK(catdeg::nabla_components(catdeg::factorizations(t, 450)) == 1);
  CHECK(catdeg::nabla_components(catdeg::factorizations(NumericalMonoid::create({6, 10, 15}), 30)) == 3);
  CHECK_THROWS_AS(catdeg::nabla_components(std::vector<Factorization>{}), catdeg::Error);
}

TEST_CASE("Betti elements of the worked examples") {
  const auto r1 = catdeg::betti_elements(NumericalMonoid::create({11, 25, 29}));
  CHECK(r1.elements() == std::vector<std::int64_t>{58, 150, 154});
  CHECK(r1.catenary_degrees() == std::vector<std::int64_t>{4, 12, 14});
  CHECK(r1.search_bound >= r1.monoid.frobenius() + 2 * 29);

  const auto r2 = catdeg::betti_elements(NumericalMonoid::create({6, 10, 15}));
  REQUIRE(r2.betti.size() == 1);
  CHECK(r2.betti[0].element == 30);
  CHECK(r2.betti[0].catenary == 5);

  const auto r3 = catdeg::betti_elements(NumericalMonoid::create({7, 13, 17}));
  CHECK(r3.elements() == std::vector<std::int64_t>{34, 52, 56});

  const auto r4 = catdeg::betti_elements(NumericalMonoid::create({1}));
  CHECK(r4.betti.empty());

  for (const auto& rec : r1.betti) CHECK(rec.components >= 2);
}

TEST_CASE("c_i n_i candidates") {
  const auto cand = catdeg::betti_via_cini(NumericalMonoid::create({11, 25, 29}));
  CHECK(cand == std::vector<std::int64_t>{58, 150, 154});
  CHECK(catdeg::betti_via_cini(NumericalMonoid::create({6, 10, 15})) ==
        std::vector<std::int64_t>{30});
  try {
    catdeg::betti_via_cini(NumericalMonoid::create({2, 3}));
    FAIL("expected NotEmbeddingDimension3");
  } catch (const catdeg::Error& e) {
    CHECK(e.code() == Errc::NotEmbeddingDimension3);
  }
  for (const auto& s : catdeg::verify::random_monoids(30, 3, 3, 60, 21)) {
    const auto c = catdeg::betti_via_cini(s);
    for (auto b : catdeg::betti_elements(s).elements())
      CHECK(std::binary_search(c.begin(), c.end(), b));
  }
}

TEST_CASE("dividing Betti elements and the sandwich bound") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  const auto report = catdeg::betti_elements(s);
  const auto div = catdeg::dividing_betti(s, report, 175);
  CHECK(std::find(div.begin(), div.end(), 150) != div.end());
  CHECK(catdeg::dividing_betti(s, report, 58) == std::vector<std::int64_t>{58});
  CHECK(catdeg::dividing_betti(s, report, 25).empty());
  CHECK_THROWS_AS(catdeg::dividing_betti(s, report, 12), catdeg::Error);

  const auto sw = catdeg::check_sandwich(s, report, 175);
  CHECK(sw.ok);
  CHECK(sw.catenary == 11);
  CHECK(sw.lower >= 4);
  CHECK(sw.upper <= 14);
  for (auto b : report.elements()) CHECK(catdeg::check_sandwich(s, report, b).ok);

  try {
    catdeg::check_sandwich(s, report, 25);
    FAIL("expected UniqueFactorization");
  } catch (const catdeg::Error& e) {
    CHECK(e.code() == Errc::UniqueFactorization);
  }
  CHECK_THROWS_AS(catdeg::check_sandwich(s, report, 13), catdeg::Error);
}

TEST_CASE("sandwich on random elements") {
  std::mt19937_64 rng(4);
  const auto pool = catdeg::verify::random_monoids(20, 3, 4, 60, 31);
  int checked = 0;
  while (checked < 200) {
    const auto& s = pool[static_cast<std::size_t>(rng() % pool.size())];
    const auto n = static_cast<std::int64_t>(rng() % 800);
    if (catdeg::count_factorizations(s, n) < 2) continue;
    const auto report = catdeg::betti_elements(s);
    CHECK(catdeg::check_sandwich(s, report, n).ok);
    ++checked;
  }
}

TEST_CASE("windowed catenary sets") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  const auto scan = catdeg::catenary_set_scan(s, 300);
  for (std::int64_t v : {0, 4, 9, 10, 11, 12, 14})
    CHECK(std::binary_search(scan.cset.begin(), scan.cset.end(), v));
  CHECK(scan.per_element.at(175) == 11);
  CHECK(scan.per_element.count(12) == 0);

  CHECK(catdeg::catenary_set_scan(NumericalMonoid::create({3, 4, 5}), 100).cset ==
        std::vector<std::int64_t>{0, 2, 3});
  CHECK(catdeg::catenary_set_scan(NumericalMonoid::create({1}), 50).cset ==
        std::vector<std::int64_t>{0});
  CHECK(catdeg::catenary_set_scan(s, 0).cset == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(catdeg::catenary_set_scan(s, -1), catdeg::Error);
}

TEST_CASE("bottleneck union-find equals the threshold definition") {
  std::mt19937_64 rng(17);
  const auto pool = catdeg::verify::random_monoids(30, 2, 4, 60, 41);
  int done = 0;
  while (done < 300) {
    const auto& s = pool[static_cast<std::size_t>(rng() % pool.size())];
    const auto n = static_cast<std::int64_t>(rng() % 301);
    const auto z = catdeg::factorizations(s, n);
    if (z.empty()) continue;
    REQUIRE(catdeg::catenary_degree(z) == catdeg::oracle::catenary_threshold(z.items));
    REQUIRE(catdeg::nabla_components(z) == catdeg::oracle::nabla_components_bfs(z.items));
    ++done;
  }
}

TEST_CASE("max and min nonzero catenary degrees occur at Betti elements") {
  for (const auto& s : catdeg::verify::random_monoids(10, 3, 4, 40, 51)) {
    const auto report = catdeg::betti_elements(s);
    const auto cset = catdeg::catenary_set_scan(s, catdeg::default_scan_window(s)).cset;
    const auto bc = report.catenary_degrees();
    REQUIRE(cset.size() >= 2);
    CHECK(cset.back() == *std::max_element(bc.begin(), bc.end()));
    CHECK(cset[1] == *std::min_element(bc.begin(), bc.end()));
    CHECK_FALSE(std::binary_search(cset.begin(), cset.end(), 1));
  }
}

TEST_CASE("no Betti elements beyond the search bound") {
  for (const auto& s : catdeg::verify::random_monoids(15, 2, 4, 50, 61)) {
    const auto b = s.betti_search_bound();
    for (std::int64_t n = b + 1; n <= b + 500; ++n) {
      const auto z = catdeg::factorizations(s, n);
      if (z.size() >= 2) REQUIRE(catdeg::nabla_components(z) == 1);
    }
  }
}

namespace {

// Minimax spanning tree by Prim: the largest edge of any minimum spanning tree.
std::int64_t prim_bottleneck(const std::vector<catdeg::Factorization>& z) {
  const std::size_t m = z.size();
  std::vector<std::int64_t> best(m, std::numeric_limits<std::int64_t>::max());
  std::vector<bool> in(m, false);
  best[0] = 0;
  std::int64_t answer = 0;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t u = m;
    for (std::size_t v = 0; v < m; ++v)
      if (!in[v] && (u == m || best[v] < best[u])) u = v;
    in[u] = true;
    answer = std::max(answer, best[u]);
    for (std::size_t v = 0; v < m; ++v)
      if (!in[v]) best[v] = std::min(best[v], catdeg::distance(z[u], z[v]));
  }
  return answer;
}

}  // namespace

TEST_CASE("catenary degree of large factorization sets spans several phases") {
  // |Z(n)| > 2900 here, so the edge list no longer fits in one phase
  const auto s = catdeg::NumericalMonoid::create({5, 6, 7, 8, 9});
  for (std::int64_t n : {190, 205}) {
    const auto z = catdeg::factorizations(s, n);
    REQUIRE(z.size() > 2900);
    CHECK(catdeg::catenary_degree(z) == prim_bottleneck(z.items));
  }
}
