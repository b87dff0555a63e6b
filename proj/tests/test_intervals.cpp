#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurlab/intervals.hpp"
#include "schurlab/product_schur.hpp"
#include "schurlab/sampler.hpp"

using namespace schurlab;

namespace {
const uint64_t kBigN = uint64_t{100'000'000'000};  // 10^11
const Rational kDelta{1, 1000};
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_decimal_rational("0.001").num == 1);
  CHECK(parse_decimal_rational("0.001").den == 1000);
  CHECK(parse_decimal_rational("1e-3").num == 1);
  CHECK(parse_decimal_rational("1e-3").den == 1000);
  CHECK(parse_decimal_rational("1/1000").den == 1000);
  CHECK(parse_decimal_rational("2.5e-2").num == 25);
  CHECK(parse_decimal_rational("2.5e-2").den == 1000);
  CHECK(parse_decimal_rational("3").den == 1);
  CHECK_THROWS_AS(parse_decimal_rational("x"), std::invalid_argument);
}

TEST_CASE("plan at 10^11 with delta 1e-3") {
  auto plan = make_interval_plan(kBigN, kDelta);
  // n^(1/11) = 10 exactly, so the window [9.99, 10] holds the single integer 10
  CHECK(plan.a().lo == 10);
  CHECK(plan.a().hi == 10);
  CHECK(plan.b().lo == 50);
  CHECK(plan.b().hi == 50);
  CHECK(plan.by_label("I_a2b2c").hi == kBigN / 4);
  CHECK(plan.by_label("I_a2bd").hi == kBigN / 6);
  // nonempty and pairwise disjoint
  for (const auto& iv : plan.intervals) CHECK(iv.lo <= iv.hi);
  for (size_t i = 0; i < plan.intervals.size(); ++i)
    for (size_t j = i + 1; j < plan.intervals.size(); ++j) {
      const auto& p = plan.intervals[i];
      const auto& q = plan.intervals[j];
      CAPTURE(p.label, q.label);
      CHECK((p.hi < q.lo || q.hi < p.lo));
    }
}

TEST_CASE("universes below the alignment are rejected with a named interval") {
  CHECK_THROWS_AS(make_interval_plan(1'000'000, kDelta), IntervalPlanError);
  try {
    make_interval_plan(1'000'000, kDelta);
  } catch (const IntervalPlanError& e) {
    CHECK(std::string(e.what()).find("interval") != std::string::npos);
  }
  CHECK_THROWS_AS(make_interval_plan(10, {1, 10}), std::exception);
}

TEST_CASE("universal admissibility threshold") {
  auto min_n = interval_plan_min_universal_n(kDelta);
  // the A window alone needs n^(1/11) >= 1000
  CHECK(BigUint::pow(BigUint{1000}, 11) <= min_n);
  CHECK_THROWS_AS(interval_plan_min_universal_n({1, 10}), std::invalid_argument);
}

TEST_CASE("planted pattern is recovered") {
  auto plan = make_interval_plan(kBigN, kDelta);
  // generators sitting inside their windows
  const PatternParams planted{10, 50, 99'950, 3'333'000};
  auto pat = build_pattern(planted);
  REQUIRE(plan.a().contains(planted.a));
  REQUIRE(plan.b().contains(planted.b));
  REQUIRE(plan.c().contains(planted.c));
  REQUIRE(plan.d().contains(planted.d));

  std::vector<uint64_t> elems(pat.values.begin(), pat.values.end());
  // noise that cannot complete a pattern: nothing in the A window
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) elems.push_back(200 + rng() % 90'000);
  auto s = IntegerSet::from_elements(kBigN, std::move(elems));

  auto found = find_pattern(s, plan);
  REQUIRE(found.has_value());
  CHECK(*found == planted);
  for (uint64_t v : build_pattern(*found).values) CHECK(s.contains(v));

  CHECK_FALSE(find_pattern(IntegerSet::from_elements(kBigN, {}), plan).has_value());
}

TEST_CASE("staged scan backtracks across stages") {
  auto plan = make_interval_plan(kBigN, kDelta);
  // a=10 admits no completion (the A window is {10} so a is forced), but a
  // decoy b without its ab partner must not block the real (b, c, d)
  const PatternParams planted{10, 50, 99'950, 3'333'000};
  auto pat = build_pattern(planted);
  std::vector<uint64_t> elems(pat.values.begin(), pat.values.end());
  // decoy c in C with ac present but abc missing: forces the c-stage to move on
  elems.push_back(99'901);
  elems.push_back(999'010);  // a * decoy_c
  auto s = IntegerSet::from_elements(kBigN, std::move(elems));
  auto found = find_pattern(s, plan);
  REQUIRE(found.has_value());
  CHECK(*found == planted);
}

TEST_CASE("exponent-interval colouring plan") {
  auto plan = build_interval_colouring(10'000, 2);
  CHECK(plan.sprime == 5);
  CHECK(plan.psi.to_letter_string() == "ABBA");
  REQUIRE(plan.boundaries.size() == 6);
  CHECK(plan.boundaries[0] == 1);
  CHECK(plan.boundaries[1] == 6);    // floor(10^(4/5)) = floor(6.30..)
  CHECK(plan.boundaries[5] == 10'000);
  CHECK(plan.interval_index_of(6) == 0);
  CHECK(plan.interval_index_of(7) == 1);
  CHECK(plan.interval_index_of(10'000) == 4);
}

TEST_CASE("product closure of the exponent intervals, exhaustively") {
  const uint64_t n = 10'000;
  auto plan = build_interval_colouring(n, 2);
  for (uint64_t a = plan.boundaries[1] + 1; a <= n; ++a) {
    const int ia = plan.interval_index_of(a);
    for (uint64_t b = a; b <= n / a; ++b) {
      const int ib = plan.interval_index_of(b);
      if (ib == 0) continue;
      const int ic = plan.interval_index_of(a * b);
      REQUIRE((ic == ia + ib || ic == ia + ib + 1));
    }
  }
}

TEST_CASE("interval colouring leaves no monochromatic product") {
  const uint64_t n = 10'000;
  auto plan = build_interval_colouring(n, 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = sample_binomial_set({n, 0.05, 77, static_cast<uint64_t>(trial)});
    std::vector<uint64_t> big;
    for (uint64_t e : raw.elements())
      if (e > plan.boundaries[1]) big.push_back(e);
    auto s = IntegerSet::from_elements(n, std::move(big));
    auto out = colour_set_by_intervals(s, plan);
    CHECK(out.uncolourable.empty());
    CHECK(out.colouring.total_on(s));
    CHECK_FALSE(find_monochromatic_product(s, out.colouring, true).has_value());
  }
}

TEST_CASE("small elements are reported uncolourable") {
  auto plan = build_interval_colouring(10'000, 2);
  auto s = IntegerSet::from_elements(10'000, {2, 6, 7, 100});
  auto out = colour_set_by_intervals(s, plan);
  CHECK(out.uncolourable == std::vector<uint64_t>{2, 6});
  CHECK(out.colouring.domain == std::vector<uint64_t>{7, 100});

  auto empty = colour_set_by_intervals(IntegerSet::from_elements(10'000, {}), plan);
  CHECK(empty.uncolourable.empty());
  CHECK(empty.colouring.domain.empty());
}

TEST_CASE("one-colour plan exists") {
  auto plan = build_interval_colouring(100, 1);
  CHECK(plan.sprime == 2);
  CHECK(plan.psi.domain == std::vector<uint64_t>{1});
}
