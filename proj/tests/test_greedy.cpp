#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurlab/greedy.hpp"
#include "schurlab/product_schur.hpp"
#include "schurlab/sampler.hpp"

using namespace schurlab;

namespace {

constexpr uint64_t p2(int e) { return uint64_t{1} << e; }

IntegerSet powers_failure_set() {
  // fails at 2^27: 2^11 = 2^5 * 2^6 and 2^16 = 2^7 * 2^9 are pushed to B,
  // then 2^27 = 2^9 * 2^9 * 2^9 (in R...R) = 2^11 * 2^16 (in B*B)
  return IntegerSet::from_elements(
      p2(27), {p2(5), p2(6), p2(7), p2(9), p2(11), p2(16), p2(27)});
}

}  // namespace

TEST_CASE("hand-simulated run") {
  auto out = greedy_two_colour(IntegerSet::from_elements(6, {2, 3, 6}));
  REQUIRE(out.success);
  CHECK(out.colouring.r_class.elements() == std::vector<uint64_t>{2, 3});
  CHECK(out.colouring.b_class.elements() == std::vector<uint64_t>{6});
}

TEST_CASE("empty set") {
  auto out = greedy_two_colour(IntegerSet::from_elements(9, {}));
  REQUIRE(out.success);
  CHECK(out.colouring.r_class.empty());
  CHECK(out.colouring.b_class.empty());
}

TEST_CASE("powers-of-two failure trace") {
  auto out = greedy_two_colour(powers_failure_set());
  REQUIRE_FALSE(out.success);
  CHECK(*out.failed_element == p2(27));
  CHECK(out.witnesses->blue_pair == std::array<uint64_t, 2>{p2(11), p2(16)});
  CHECK(out.witnesses->red_tuple == std::array<uint64_t, 3>{p2(9), p2(9), p2(9)});
  CHECK(out.colouring.r_class.elements() ==
        std::vector<uint64_t>{p2(5), p2(6), p2(7), p2(9)});
  CHECK(out.colouring.b_class.elements() ==
        std::vector<uint64_t>{p2(11), p2(16)});
}

TEST_CASE("extraction rebuilds the exact certificate") {
  auto s = powers_failure_set();
  auto out = greedy_two_colour(s);
  auto cfg = extract_forbidden_configuration(out, s);
  CHECK(cfg.a == p2(11));
  CHECK(cfg.b == p2(16));
  CHECK(cfg.c == p2(27));
  CHECK(cfg.d == p2(9));
  CHECK(cfg.e == p2(9));
  CHECK(cfg.f == p2(9));
  CHECK(cfg.x == p2(5));
  CHECK(cfg.y == p2(6));
  CHECK(cfg.z == 1);
  CHECK(cfg.u == p2(7));
  CHECK(cfg.v == p2(9));
  CHECK(cfg.w == 1);
  CHECK(check_forbidden_configuration(cfg, s).valid);
  CHECK(effective_size(cfg) == 7);
}

TEST_CASE("certificate validation clause by clause") {
  auto s = powers_failure_set();
  ForbiddenConfiguration good{p2(11), p2(16), p2(27), p2(9), p2(9), p2(9),
                              p2(5),  p2(6),  1,      p2(7), p2(9), 1};
  CHECK(check_forbidden_configuration(good, s).valid);

  // a appears among the later entries: clause (iii)
  ForbiddenConfiguration iii = good;
  iii.a = good.c;
  auto res3 = check_forbidden_configuration(iii, s);
  REQUIRE_FALSE(res3.valid);
  bool has_iii = false;
  for (const auto& v : res3.violations) has_iii |= v.find("(iii)") != std::string::npos;
  CHECK(has_iii);

  // 10 = 2 * 5 lands in A and in A*A: clause (iv)
  auto t = IntegerSet::from_elements(210, {2, 3, 5, 6, 7, 10, 21, 35, 210});
  ForbiddenConfiguration iv{6, 35, 210, 10, 21, 1, 2, 3, 1, 5, 7, 1};
  auto res4 = check_forbidden_configuration(iv, t);
  REQUIRE_FALSE(res4.valid);
  REQUIRE(res4.violations.size() == 1);
  CHECK(res4.violations[0].find("(iv)") != std::string::npos);
}

TEST_CASE("effective size counts distinct non-unit entries") {
  ForbiddenConfiguration ones{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(effective_size(ones) == 0);
  ForbiddenConfiguration twelve{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  CHECK(effective_size(twelve) == 12);
}

TEST_CASE("extraction contract violations") {
  auto s = powers_failure_set();
  auto out = greedy_two_colour(s);

  auto success = greedy_two_colour(IntegerSet::from_elements(6, {2, 3, 6}));
  CHECK_THROWS_AS(
      extract_forbidden_configuration(success, IntegerSet::from_elements(6, {2, 3, 6})),
      std::invalid_argument);

  auto tampered = out;
  tampered.witnesses->blue_pair = {p2(5), p2(22)};  // 2^22 was never coloured
  CHECK_THROWS_AS(extract_forbidden_configuration(tampered, s), std::invalid_argument);

  auto with_one = IntegerSet::from_elements(p2(27), [&] {
    auto v = s.elements();
    v.push_back(1);
    return v;
  }());
  auto failed_with_one = out;  // same witnesses, but claim 1 in S
  CHECK_THROWS_AS(extract_forbidden_configuration(failed_with_one, with_one),
                  std::invalid_argument);
}

TEST_CASE("element 1 goes red and the run still stands") {
  auto out = greedy_two_colour(IntegerSet::from_elements(3, {1, 2, 3}));
  REQUIRE(out.success);
  CHECK(out.colouring.r_class.elements() == std::vector<uint64_t>{1, 2, 3});
}

TEST_CASE("success means product-free classes and a correct one-sided bound") {
  FactorSieve sieve(3000);
  std::mt19937_64 seeds(404);
  int successes = 0;
  for (int iter = 0; iter < 120; ++iter) {
    auto s = sample_binomial_set({3000, 0.06, seeds(), 0});
    auto out = greedy_two_colour(s, &sieve);
    auto no_sieve = greedy_two_colour(s);
    CHECK(out.success == no_sieve.success);
    if (!out.success) continue;
    ++successes;
    CHECK(out.colouring.r_class.size() + out.colouring.b_class.size() == s.size());
    CHECK(enumerate_product_triples(out.colouring.r_class, true).empty());
    CHECK(enumerate_product_triples(out.colouring.b_class, true).empty());
    auto exact = is_product_schur(s, 2);
    REQUIRE(exact.outcome == DecisionOutcome::not_product_schur);
  }
  CHECK(successes > 0);
}

TEST_CASE("identical inputs give identical outcomes") {
  auto s = sample_binomial_set({2000, 0.1, 8, 0});
  auto a = greedy_two_colour(s);
  auto b = greedy_two_colour(s);
  CHECK(a.success == b.success);
  CHECK(a.colouring.r_class == b.colouring.r_class);
  CHECK(a.colouring.b_class == b.colouring.b_class);
}
