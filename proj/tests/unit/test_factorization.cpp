#include <doctest.h>

#include <random>

#include "catdeg/error.hpp"
#include "catdeg/factorization.hpp"
#include "catdeg/oracle.hpp"
#include "catdeg/verify.hpp"

using catdeg::Factorization;
using catdeg::NumericalMonoid;

TEST_CASE("Z(450) in <11,36,39>") {
  const auto s = NumericalMonoid::create({11, 36, 39});
  const auto z = catdeg::factorizations(s, 450);
  CHECK(z.element == 450);
  CHECK(z.contains({6, 2, 8}));
  CHECK(z.contains({24, 3, 2}));
  CHECK(z.size() == 8);
  CHECK(std::is_sorted(z.items.begin(), z.items.end()));
  for (const auto& a : z.items)
    CHECK(a.counts[0] * 11 + a.counts[1] * 36 + a.counts[2] * 39 == 450);
  CHECK(catdeg::count_factorizations(s, 450) == 8);
}

TEST_CASE("trivial and empty factorization sets") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  const auto zero = catdeg::factorizations(s, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.items[0].is_zero());
  CHECK(catdeg::factorizations(s, 12).empty());
  CHECK(catdeg::count_factorizations(s, 12) == 0);
  CHECK_THROWS_AS(catdeg::factorizations(s, -1), catdeg::Error);
}

TEST_CASE("Z(175) in <11,25,29> has three elements") {
  const auto s = NumericalMonoid::create({11, 25, 29});
  const auto z = catdeg::factorizations(s, 175);
  CHECK(z.items == std::vector<Factorization>{{0, 7, 0}, {8, 0, 3}, {11, 1, 1}});
}

TEST_CASE("lengths, length sets and delta sets") {
  CHECK(catdeg::length({6, 2, 8}) == 16);
  CHECK(catdeg::length({24, 3, 2}) == 29);
  CHECK(catdeg::length({0, 0, 0}) == 0);

  const auto s = NumericalMonoid::create({30, 52, 55});
  const auto z260 = catdeg::factorizations(s, 260);
  CHECK(catdeg::length_set(z260.items) == std::vector<std::int64_t>{5, 7});
  CHECK(catdeg::delta_set(z260.items) == std::vector<std::int64_t>{2});
  CHECK(catdeg::delta_set(catdeg::factorizations(s, 330).items) == std::vector<std::int64_t>{5});

  const auto atom = catdeg::factorizations(s, 30);
  CHECK(catdeg::length_set(atom.items) == std::vector<std::int64_t>{1});
  CHECK(catdeg::delta_set(atom.items).empty());

  const auto t = NumericalMonoid::create({11, 36, 39});
  const auto ls = catdeg::length_set(catdeg::factorizations(t, 450).items);
  CHECK(std::binary_search(ls.begin(), ls.end(), 16));
  CHECK(std::binary_search(ls.begin(), ls.end(), 29));

  CHECK_THROWS_AS(catdeg::length_set(std::vector<Factorization>{}), catdeg::Error);
  CHECK_THROWS_AS(catdeg::delta_set(std::vector<Factorization>{}), catdeg::Error);
}

TEST_CASE("gcd and distance") {
  CHECK(catdeg::gcd_fact({6, 2, 8}, {24, 3, 2}) == Factorization{6, 2, 2});
  CHECK(catdeg::gcd_fact({3, 1}, {3, 1}) == Factorization{3, 1});
  CHECK(catdeg::gcd_fact({1, 0}, {0, 1}) == Factorization{0, 0});
  CHECK(catdeg::distance({6, 2, 8}, {24, 3, 2}) == 19);
  CHECK(catdeg::distance({4, 4, 1}, {4, 4, 1}) == 0);
  CHECK(catdeg::distance({1, 0}, {0, 1}) == 1);
  try {
    catdeg::distance({1, 0}, {1, 0, 0});
    FAIL("expected DimensionMismatch");
  } catch (const catdeg::Error& e) {
    CHECK(e.code() == catdeg::Errc::DimensionMismatch);
  }
  CHECK_THROWS_AS(catdeg::gcd_fact({1}, {1, 2}), catdeg::Error);
}

TEST_CASE("enumeration matches naive nested loops") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> pick(0, 500);
  for (const auto& s : catdeg::verify::random_monoids(15, 1, 4, 60, 5)) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto n = pick(rng);
      REQUIRE(catdeg::factorizations(s, n).items ==
              catdeg::oracle::factorizations_nested(s.generators(), n));
    }
  }
}

TEST_CASE("distance properties on random vectors") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> entry(0, 9);
  auto draw = [&] {
    std::vector<std::int64_t> v(4);
    for (auto& x : v) x = entry(rng);
    return Factorization(v);
  };
  for (int i = 0; i < 2000; ++i) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    CHECK(catdeg::distance(a, b) == catdeg::distance(b, a));
    CHECK((catdeg::distance(a, b) == 0) == (a == b));
    CHECK(catdeg::distance(a, c) <= catdeg::distance(a, b) + catdeg::distance(b, c));
    std::vector<std::int64_t> ac(4);
    std::vector<std::int64_t> bc(4);
    for (int j = 0; j < 4; ++j) {
      ac[static_cast<std::size_t>(j)] = a.counts[static_cast<std::size_t>(j)] + c.counts[static_cast<std::size_t>(j)];
      bc[static_cast<std::size_t>(j)] = b.counts[static_cast<std::size_t>(j)] + c.counts[static_cast<std::size_t>(j)];
    }
    CHECK(catdeg::distance(Factorization(ac), Factorization(bc)) == catdeg::distance(a, b));
  }
}

TEST_CASE("distinct factorizations of one element are at distance at least 2") {
  for (const auto& s : catdeg::verify::random_monoids(10, 2, 4, 40, 11)) {
    for (std::int64_t n = 0; n <= 250; ++n) {
      const auto z = catdeg::factorizations(s, n);
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
          REQUIRE(catdeg::distance(z.items[i], z.items[j]) >= 2);
    }
  }
}

TEST_CASE("canonicalize deduplicates") {
  std::vector<Factorization> v{{2, 0}, {0, 1}, {2, 0}};
  catdeg::canonicalize(v);
  CHECK(v == std::vector<Factorization>{{0, 1}, {2, 0}});
}
