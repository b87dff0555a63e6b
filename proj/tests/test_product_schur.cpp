#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurlab/product_schur.hpp"

using namespace schurlab;

namespace {

IntegerSet powers_of(uint64_t x, int m) {
  std::vector<uint64_t> v;
  uint64_t cur = 1;
  for (int i = 0; i < m; ++i) {
    cur *= x;
    v.push_back(cur);
  }
  return IntegerSet::from_elements(v.back(), std::move(v));
}

// Brute force: try every r-colouring of the elements that occur in triples.
bool brute_is_schur(const IntegerSet& s, int r, bool degenerate) {
  auto triples = enumerate_product_triples(s, degenerate);
  if (triples.empty()) return false;
  std::vector<uint64_t> vars;
  for (const auto& t : triples) {
    vars.push_back(t.a);
    vars.push_back(t.b);
    vars.push_back(t.c);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  REQUIRE(vars.size() <= 20);
  std::vector<int> colour(vars.size());
  auto idx = [&](uint64_t e) {
    return std::lower_bound(vars.begin(), vars.end(), e) - vars.begin();
  };
  uint64_t total = 1;
  for (size_t i = 0; i < vars.size(); ++i) total *= r;
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (size_t i = 0; i < vars.size(); ++i) {
      colour[i] = static_cast<int>(c % r);
      c /= r;
    }
    bool mono = false;
    for (const auto& t : triples)
      if (colour[idx(t.a)] == colour[idx(t.b)] &&
          colour[idx(t.a)] == colour[idx(t.c)]) {
        mono = true;
        break;
      }
    if (!mono) return false;  // found a good colouring
  }
  return true;
}

}  // namespace

TEST_CASE("three elements, one triple") {
  auto s = IntegerSet::from_elements(6, {2, 3, 6});
  auto res = is_product_schur(s, 2);
  REQUIRE(res.outcome == DecisionOutcome::not_product_schur);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->total_on(s));
  CHECK_FALSE(find_monochromatic_product(s, *res.witness).has_value());
}

TEST_CASE("geometric progressions mirror interval forcing") {
  CHECK(is_product_schur(powers_of(2, 5), 2).outcome ==
        DecisionOutcome::product_schur);
  auto four = is_product_schur(powers_of(2, 4), 2);
  REQUIRE(four.outcome == DecisionOutcome::not_product_schur);
  CHECK_FALSE(find_monochromatic_product(powers_of(2, 4), *four.witness).has_value());
}

TEST_CASE("powers-of-x reduction across bases and colour counts") {
  const uint64_t forcing[] = {0, 2, 5, 14};  // 1, 2, 3 colours
  for (uint64_t x : {2, 3})
    for (int r = 1; r <= 3; ++r)
      for (int m = 1; m <= 13; ++m) {
        auto res = is_product_schur(powers_of(x, m), r);
        REQUIRE(res.outcome != DecisionOutcome::unknown);
        CAPTURE(x, r, m);
        CHECK((res.outcome == DecisionOutcome::product_schur) ==
              (static_cast<uint64_t>(m) >= forcing[r]));
      }
}

TEST_CASE("the fourteen-element pattern at (2,3,5,7)") {
  auto s = IntegerSet::from_elements(
      180, {2, 3, 6, 5, 10, 30, 60, 180, 7, 14, 21, 42, 28, 84});
  CHECK(is_product_schur(s, 2).outcome == DecisionOutcome::product_schur);
}

TEST_CASE("degenerate flag changes the decision") {
  auto s = IntegerSet::from_elements(4, {2, 4});
  CHECK(is_product_schur(s, 1, true).outcome == DecisionOutcome::product_schur);
  CHECK(is_product_schur(s, 1, false).outcome ==
        DecisionOutcome::not_product_schur);
  // without squares the five powers of two are two-colourable
  CHECK(is_product_schur(powers_of(2, 5), 2, false).outcome ==
        DecisionOutcome::not_product_schur);
}

TEST_CASE("trivial inputs") {
  auto empty = is_product_schur(IntegerSet::from_elements(10, {}), 2);
  CHECK(empty.outcome == DecisionOutcome::not_product_schur);
  auto one = is_product_schur(IntegerSet::from_elements(10, {1}), 2);
  CHECK(one.outcome == DecisionOutcome::not_product_schur);
  CHECK_THROWS_AS(is_product_schur(IntegerSet::from_elements(4, {2, 4}), 0),
                  std::invalid_argument);
}

TEST_CASE("budget exhaustion reported as unknown") {
  auto res = is_product_schur(powers_of(2, 5), 2, true, /*node_budget=*/1);
  CHECK(res.outcome == DecisionOutcome::unknown);
}

TEST_CASE("oracle equivalence on random small sets") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 150; ++iter) {
    const uint64_t n = 8 + rng() % 120;
    std::vector<uint64_t> elems;
    const size_t want = 2 + rng() % 17;
    while (elems.size() < want) elems.push_back(2 + rng() % (n - 1));
    auto s = IntegerSet::from_elements(n, std::move(elems));
    const int r = 2 + static_cast<int>(rng() % 2);
    const bool deg = (rng() % 2) == 0;
    auto res = is_product_schur(s, r, deg);
    REQUIRE(res.outcome != DecisionOutcome::unknown);
    CAPTURE(iter, n, r, deg);
    REQUIRE((res.outcome == DecisionOutcome::product_schur) ==
            brute_is_schur(s, r, deg));
    if (res.outcome == DecisionOutcome::not_product_schur)
      REQUIRE_FALSE(find_monochromatic_product(s, *res.witness, deg).has_value());
  }
}

TEST_CASE("monotone under supersets") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<uint64_t> elems;
    while (elems.size() < 10) elems.push_back(2 + rng() % 62);
    auto small = IntegerSet::from_elements(64, elems);
    for (int extra = 0; extra < 6; ++extra) elems.push_back(2 + rng() % 62);
    auto large = IntegerSet::from_elements(64, elems);
    if (is_product_schur(small, 2).outcome == DecisionOutcome::product_schur)
      CHECK(is_product_schur(large, 2).outcome == DecisionOutcome::product_schur);
  }
}
