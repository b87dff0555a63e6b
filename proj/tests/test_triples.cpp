#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurlab/triples.hpp"

using namespace schurlab;

namespace {

// Full cross-product filter over pairs with both factors >= 2.
std::vector<ProductTriple> oracle(const IntegerSet& s, bool allow_degenerate) {
  std::vector<ProductTriple> out;
  for (uint64_t a : s.elements()) {
    if (a < 2) continue;
    for (uint64_t b : s.elements()) {
      if (b < a) continue;
      if (!allow_degenerate && a == b) continue;
      const unsigned __int128 c = static_cast<unsigned __int128>(a) * b;
      if (c <= s.universe() && s.contains(static_cast<uint64_t>(c)))
        out.push_back({a, b, static_cast<uint64_t>(c)});
    }
  }
  std::sort(out.begin(), out.end(), [](const ProductTriple& l, const ProductTriple& r) {
    return l.c != r.c ? l.c < r.c : l.a < r.a;
  });
  return out;
}

}  // namespace

TEST_CASE("worked example with and without degenerate squares") {
  auto s = IntegerSet::from_elements(12, {2, 3, 4, 6, 8, 12});
  auto with = enumerate_product_triples(s, true);
  std::vector<ProductTriple> expected = {
      {2, 2, 4}, {2, 3, 6}, {2, 4, 8}, {2, 6, 12}, {3, 4, 12}};
  CHECK(with == expected);
  auto without = enumerate_product_triples(s, false);
  expected.erase(expected.begin());
  CHECK(without == expected);
}

TEST_CASE("empty set") {
  CHECK(enumerate_product_triples(IntegerSet::from_elements(5, {}), true).empty());
}

TEST_CASE("factor 1 never forms a triple") {
  auto s = IntegerSet::from_elements(4, {1, 2, 4});
  auto ts = enumerate_product_triples(s, true);
  CHECK(ts == std::vector<ProductTriple>{{2, 2, 4}});
  // and without degenerate squares nothing is left
  CHECK(enumerate_product_triples(s, false).empty());
}

TEST_CASE("oracle equivalence on random sets up to 50 elements") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const uint64_t n = 2 + rng() % 400;
    std::vector<uint64_t> elems;
    const size_t want = rng() % 51;
    while (elems.size() < want) elems.push_back(1 + rng() % n);
    auto s = IntegerSet::from_elements(n, std::move(elems));
    for (bool deg : {true, false}) {
      CAPTURE(iter, n, deg);
      REQUIRE(enumerate_product_triples(s, deg) == oracle(s, deg));
    }
  }
}

TEST_CASE("degenerate flag semantics") {
  ProductTriple t{3, 3, 9};
  CHECK(t.degenerate());
  CHECK_FALSE(ProductTriple{2, 3, 6}.degenerate());
}
