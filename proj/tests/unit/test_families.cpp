#include <doctest.h>

#include <algorithm>

#include "catdeg/catenary.hpp"
#include "catdeg/error.hpp"
#include "catdeg/families.hpp"

using catdeg::Errc;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const catdeg::Error& e) {
    return e.code();
  }
  FAIL("expected catdeg::Error");
  return Errc::BadParameters;
}

std::vector<std::int64_t> scanned(const catdeg::FamilyPrediction& p) {
  return catdeg::catenary_set_scan(p.monoid, catdeg::prediction_window(p)).cset;
}

}  // namespace

TEST_CASE("arithmetic family") {
  const auto a = catdeg::arithmetic_family(3, 3);
  CHECK(a.monoid.generators() == std::vector<std::int64_t>{3, 4, 5});
  CHECK(a.predicted_cset_members == std::vector<std::int64_t>{0, 2, 3});
  CHECK(a.cset_exact);
  CHECK(scanned(a) == a.predicted_cset_members);

  const auto b = catdeg::arithmetic_family(3, 4);
  CHECK(b.monoid.generators() == std::vector<std::int64_t>{3, 5, 7});
  CHECK(scanned(b) == std::vector<std::int64_t>{0, 2, 4});

  const auto c = catdeg::arithmetic_family(4, 5);
  CHECK(c.monoid.generators() == std::vector<std::int64_t>{4, 7, 10, 13});
  CHECK(scanned(c) == std::vector<std::int64_t>{0, 2, 5});

  CHECK(code_of([] { catdeg::arithmetic_family(2, 5); }) == Errc::BadParameters);
  CHECK(code_of([] { catdeg::arithmetic_family(3, 2); }) == Errc::BadParameters);
  CHECK(code_of([] { catdeg::arithmetic_family(4, 4); }) == Errc::NotCoprime);
}

TEST_CASE("large catenary family at k = 5 and k = 3") {
  const auto p = catdeg::largecat_family(5);
  CHECK(p.monoid.generators() == std::vector<std::int64_t>{11, 25, 29});
  std::vector<std::int64_t> betti;
  for (const auto& b : p.predicted_betti) betti.push_back(b.element);
  CHECK(betti == std::vector<std::int64_t>{58, 150, 154});
  CHECK(p.special_elements[1].element == 175);
  CHECK(p.special_elements[1].catenary == 11);
  CHECK(p.special_elements[1].num_factorizations == 3);
  CHECK(p.predicted_cset_members == std::vector<std::int64_t>{0, 4, 9, 10, 11, 12, 14});
  CHECK_FALSE(p.cset_exact);

  const auto q = catdeg::largecat_family(3);
  CHECK(q.monoid.generators() == std::vector<std::int64_t>{7, 13, 17});
  CHECK(q.special_elements.front().element == 52);  // s_0 = v
  CHECK(code_of([] { catdeg::largecat_family(2); }) == Errc::BadParameters);
}

TEST_CASE("large catenary family predictions hold by recomputation") {
  for (std::int64_t k = 3; k <= 8; ++k) {
    const auto p = catdeg::largecat_family(k);
    const auto report = catdeg::betti_elements(p.monoid);
    REQUIRE(report.betti.size() == p.predicted_betti.size());
    for (std::size_t i = 0; i < report.betti.size(); ++i) {
      CHECK(report.betti[i].element == p.predicted_betti[i].element);
      CHECK(report.betti[i].catenary == p.predicted_betti[i].catenary);
    }
    for (const auto& sp : p.special_elements) {
      const auto z = catdeg::factorizations(p.monoid, sp.element);
      CHECK(static_cast<std::int64_t>(z.size()) == sp.num_factorizations);
      CHECK(catdeg::catenary_degree(z) == sp.catenary);
    }
    const auto cset = scanned(p);
    for (auto m : p.predicted_cset_members)
      CHECK(std::binary_search(cset.begin(), cset.end(), m));
  }
}

TEST_CASE("unique Betti family") {
  const std::vector<std::int64_t> p235{2, 3, 5};
  const auto a = catdeg::unique_betti_family(p235);
  CHECK(a.monoid.generators() == std::vector<std::int64_t>{6, 10, 15});
  CHECK(a.predicted_betti.front().element == 30);
  CHECK(scanned(a) == std::vector<std::int64_t>{0, 5});

  const std::vector<std::int64_t> p23{2, 3};
  const auto b = catdeg::unique_betti_family(p23);
  CHECK(b.monoid.generators() == std::vector<std::int64_t>{2, 3});
  CHECK(scanned(b) == std::vector<std::int64_t>{0, 3});

  const std::vector<std::int64_t> p2357{2, 3, 5, 7};
  const auto c = catdeg::unique_betti_family(p2357);
  CHECK(c.monoid.generators() == std::vector<std::int64_t>{30, 42, 70, 105});
  CHECK(catdeg::betti_elements(c.monoid).elements() == std::vector<std::int64_t>{210});
  CHECK(scanned(c) == std::vector<std::int64_t>{0, 7});

  const std::vector<std::int64_t> one{5};
  const std::vector<std::int64_t> repeated{3, 3};
  const std::vector<std::int64_t> composite{2, 9};
  const std::vector<std::int64_t> unsorted{5, 3};
  CHECK(code_of([&] { catdeg::unique_betti_family(one); }) == Errc::TooFew);
  CHECK(code_of([&] { catdeg::unique_betti_family(repeated); }) == Errc::NotDistinctPrimes);
  CHECK(code_of([&] { catdeg::unique_betti_family(composite); }) == Errc::NotDistinctPrimes);
  CHECK(code_of([&] { catdeg::unique_betti_family(unsorted); }) == Errc::NotDistinctPrimes);
}
