#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "schurlab/patterns.hpp"

using namespace schurlab;

TEST_CASE("the fourteen products of (2,3,5,7)") {
  auto p = build_pattern({2, 3, 5, 7});
  const std::array<uint64_t, 14> expect = {2, 3, 6,  5,  10, 30, 60,
                                           180, 7, 14, 21, 42, 28, 84};
  CHECK(p.values == expect);
  CHECK(p.values[7] == 180);  // a^2 b^2 c = 4 * 9 * 5
}

TEST_CASE("collisions are rejected with the offending pair") {
  try {
    build_pattern({2, 2, 2, 2});
    FAIL("expected a collision");
  } catch (const PatternCollision& e) {
    CHECK(std::string(e.first) == "a");
    CHECK(std::string(e.second) == "b");
    CHECK(e.value == 2);
  }
  CHECK_THROWS_AS(build_pattern({2, 4, 5, 7}), PatternCollision);  // ab = 8 vs ...
  CHECK_THROWS_AS(build_pattern({1, 3, 5, 7}), std::invalid_argument);
  CHECK_THROWS_AS(build_pattern({uint64_t{1} << 40, 3, 5, 7}), std::overflow_error);
}

TEST_CASE("pattern sets force a monochromatic product under two colours") {
  CHECK(verify_pattern_product_schur({2, 3, 5, 7}));
  CHECK(verify_pattern_product_schur({2, 3, 5, 11}));
  CHECK(verify_pattern_product_schur({3, 4, 7, 13}));
}

TEST_CASE("random parameter sample keeps the property") {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 25) {
    PatternParams p{2 + rng() % 40, 2 + rng() % 40, 2 + rng() % 40, 2 + rng() % 40};
    try {
      build_pattern(p);
    } catch (const std::invalid_argument&) {
      continue;  // collision: not a valid parameter choice
    }
    CAPTURE(p.a, p.b, p.c, p.d);
    REQUIRE(verify_pattern_product_schur(p));
    ++checked;
  }
}

TEST_CASE("geometric patterns") {
  auto u2 = build_power_pattern(2, 5, 32);
  CHECK(u2.values == std::vector<uint64_t>{2, 4, 8, 16, 32});
  CHECK(is_product_schur(IntegerSet::from_elements(32, u2.values), 2).outcome ==
        DecisionOutcome::product_schur);
  auto u2_short = build_power_pattern(2, 4, 32);
  CHECK(is_product_schur(IntegerSet::from_elements(32, u2_short.values), 2).outcome ==
        DecisionOutcome::not_product_schur);
  auto u3 = build_power_pattern(3, 2, 9);
  CHECK(is_product_schur(IntegerSet::from_elements(9, u3.values), 1).outcome ==
        DecisionOutcome::product_schur);  // 3 * 3 = 9 under one colour
  CHECK_THROWS_AS(build_power_pattern(2, 5, 31), std::overflow_error);
  CHECK_THROWS_AS(build_power_pattern(1, 5, 100), std::invalid_argument);
}

TEST_CASE("greedy family at small n") {
  auto tiny = greedy_disjoint_power_family(32, 5);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].base == 2);

  auto fam = greedy_disjoint_power_family(10'000, 5);
  std::vector<uint64_t> bases;
  std::set<uint64_t> all;
  for (const auto& u : fam) {
    bases.push_back(u.base);
    for (uint64_t v : u.values) {
      CHECK(all.insert(v).second);  // pairwise disjoint
      CHECK(v <= 10'000);
    }
  }
  CHECK(bases == std::vector<uint64_t>{2, 3, 5, 6});
  CHECK(fam.size() >= power_family_size_bound(10'000, 5));
}

TEST_CASE("family size bound") {
  CHECK(power_family_size_bound(32, 5) == 0);
  CHECK(power_family_size_bound(1'000'000, 5) == 0);   // floor(15 / 25)
  CHECK(power_family_size_bound(uint64_t{1} << 35, 5) == 5);  // floor(128 / 25)
  for (uint64_t n : {100ull, 10'000ull, 1'000'000ull, 100'000'000ull})
    CHECK(greedy_disjoint_power_family(n, 5).size() >=
          power_family_size_bound(n, 5));
}
