#include <catch2/catch_amalgamated.hpp>

#include "schurlab/tuple_count.hpp"

using namespace schurlab;

TEST_CASE("single coordinate, exponent 1") {
  auto table = build_divisor_table(10);
  auto res = count_bounded_product_tuples({{1}, 1, 10}, table);
  CHECK(res.count == 10);
  CHECK(res.bound_numerator.to_string() == "40");  // 10 * D(10) = 10 * 4
  CHECK(res.bound_denominator.to_string() == "1");
  CHECK(res.bound_holds);
}

TEST_CASE("square coordinate forced empty") {
  auto table = build_divisor_table(4);
  auto res = count_bounded_product_tuples({{2}, 4, 4}, table);
  CHECK(res.count == 0);  // a >= 4 and a^2 <= 4 cannot coexist
  CHECK(res.bound_holds);
}

TEST_CASE("two free coordinates vs a double loop") {
  auto table = build_divisor_table(30);
  auto res = count_bounded_product_tuples({{1, 1}, 1, 30}, table);
  uint64_t expect = 0;
  for (uint64_t a = 1; a <= 30; ++a)
    for (uint64_t b = 1; b <= 30; ++b)
      if (a * b <= 30) ++expect;
  CHECK(res.count == expect);
  // bound = 30 * D(30)^2 = 30 * 64
  CHECK(res.bound_numerator.to_string() == "1920");
  CHECK(res.bound_holds);
}

TEST_CASE("mixed exponents against a brute oracle") {
  const uint64_t n = 200;
  auto table = build_divisor_table(n);
  const TupleCountQuery q{{1, 2}, 3, n};
  auto res = count_bounded_product_tuples(q, table);
  uint64_t expect = 0;
  for (uint64_t a = 1; a <= n; ++a)
    for (uint64_t b = 3; b <= n; ++b)
      if (a * b * b <= n) ++expect;
  CHECK(res.count == expect);
  CHECK(res.bound_holds);
  // e - k = 1, so the denominator is t
  CHECK(res.bound_denominator.to_string() == "3");
}

TEST_CASE("validation") {
  auto table = build_divisor_table(10);
  CHECK_THROWS_AS(count_bounded_product_tuples({{}, 1, 10}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_bounded_product_tuples({{2, 1}, 1, 10}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_bounded_product_tuples({{1}, 0, 10}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_bounded_product_tuples({{1}, 11, 10}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_bounded_product_tuples({{1}, 1, 100}, table),
                  std::invalid_argument);  // table too small
}

TEST_CASE("budget guard") {
  auto table = build_divisor_table(1000);
  CHECK_THROWS_AS(
      count_bounded_product_tuples({{1, 1, 1}, 1, 1000}, table, /*budget=*/50),
      BudgetExceeded);
}

TEST_CASE("bound holds across a small sweep") {
  const uint64_t n = 120;
  auto table = build_divisor_table(n);
  const std::vector<std::vector<uint32_t>> exps = {
      {1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 3}};
  for (const auto& e : exps)
    for (uint64_t t : {uint64_t{1}, uint64_t{2}, uint64_t{4}}) {
      auto res = count_bounded_product_tuples({e, t, n}, table);
      CAPTURE(e, t);
      REQUIRE(res.bound_holds);
    }
}
