#include <catch2/catch_amalgamated.hpp>

#include "schurlab/bigint.hpp"

using schurlab::BigUint;

TEST_CASE("small values render in decimal") {
  CHECK(BigUint{}.to_string() == "0");
  CHECK(BigUint{1}.to_string() == "1");
  CHECK(BigUint{999999999}.to_string() == "999999999");
  CHECK(BigUint{1000000000}.to_string() == "1000000000");
  CHECK(BigUint{UINT64_MAX}.to_string() == "18446744073709551615");
}

TEST_CASE("multiplication matches 64-bit arithmetic in range") {
  const uint64_t xs[] = {0, 1, 2, 97, 123456789, 4294967296ull};
  for (uint64_t a : xs)
    for (uint64_t b : xs) {
      if (b != 0 && a > UINT64_MAX / b) continue;
      CHECK((BigUint{a} * BigUint{b}).to_string() == std::to_string(a * b));
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
  for (uint64_t base : {2ull, 6ull, 10ull, 12345ull}) {
    BigUint by_mult{1};
    for (unsigned e = 0; e <= 40; ++e) {
      CHECK(BigUint::pow(BigUint{base}, e) == by_mult);
      by_mult *= BigUint{base};
    }
  }
}

TEST_CASE("known power value") {
  CHECK(BigUint::pow(BigUint{2}, 100).to_string() ==
        "1267650600228229401496703205376");
}

TEST_CASE("ordering") {
  CHECK(BigUint{3} < BigUint{5});
  CHECK(BigUint::pow(BigUint{10}, 20) < BigUint::pow(BigUint{10}, 21));
  CHECK(BigUint::pow(BigUint{7}, 30) == BigUint::pow(BigUint{7}, 30));
  CHECK(BigUint{0} < BigUint{1});
  CHECK(BigUint::pow(BigUint{2}, 64) > BigUint{UINT64_MAX});
}

TEST_CASE("u64 round trip") {
  CHECK(BigUint{123456789012345ull}.fits_u64());
  CHECK(BigUint{123456789012345ull}.to_u64() == 123456789012345ull);
  CHECK_FALSE(BigUint::pow(BigUint{2}, 100).fits_u64());
}
