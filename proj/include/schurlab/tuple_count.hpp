#pragma once

// Exhaustive counting of exponent-weighted tuples with bounded product, and
// the counting bound n * t^(k-e) * D(n)^k it is checked against. Since
// e = sum(e_i) >= k, the t power is a true denominator; the comparison is
// done as count * t^(e-k) <= n * D(n)^k in exact integers.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schurlab/bigint.hpp"
#include "schurlab/divisors.hpp"

namespace schurlab {

struct TupleCountQuery {
  std::vector<uint32_t> exponents;  // e_1 <= e_2 <= ... <= e_k, all >= 1
  uint64_t t = 1;                   // lower bound for coordinates with e_i >= 2
  uint64_t n = 1;                   // product cap (and coordinate cap)
};

struct TupleCountResult {
  uint64_t count = 0;
  BigUint bound_numerator;    // n * D(n)^k
  BigUint bound_denominator;  // t^(e-k)
  bool bound_holds = false;   // count * t^(e-k) <= n * D(n)^k
  uint64_t nodes = 0;         // enumeration steps spent
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// a^e <= cap, without overflow. Assumes a >= 1, e >= 1.
inline bool pow_within(uint64_t a, uint32_t e, uint64_t cap, uint64_t& out) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (a != 0 && r > cap / a) return false;
    r *= a;
  }
  out = r;
  return true;
}

}  // namespace detail

// Counts k-tuples (a_1, ..., a_k) with a_i in [n], a_i >= t whenever
// e_i >= 2, and prod a_i^{e_i} <= n. Tuples are ordered: coordinates are
// distinct slots tied to their exponents. Enumeration cost is capped by
// `node_budget` loop steps; exceeding it throws BudgetExceeded rather than
// returning a partial count.
inline TupleCountResult count_bounded_product_tuples(
    const TupleCountQuery& q, const DivisorTable& table,
    uint64_t node_budget = 50'000'000) {
  const size_t k = q.exponents.size();
  if (k == 0) throw std::invalid_argument("tuple count: k must be >= 1");
  for (size_t i = 0; i < k; ++i) {
    if (q.exponents[i] < 1)
      throw std::invalid_argument("tuple count: exponents must be >= 1");
    if (i > 0 && q.exponents[i] < q.exponents[i - 1])
      throw std::invalid_argument("tuple count: exponents must be non-decreasing");
  }
  if (q.t < 1 || q.t > q.n)
    throw std::invalid_argument("tuple count: need 1 <= t <= n");
  if (table.n < q.n)
    throw std::invalid_argument("tuple count: divisor table extent too small");

  uint64_t e_total = 0;
  for (uint32_t e : q.exponents) e_total += e;

  TupleCountResult res;
  res.bound_numerator =
      BigUint{q.n} * BigUint::pow(BigUint{table.max_divisor_count(q.n)}, k);
  res.bound_denominator = BigUint::pow(BigUint{q.t}, e_total - k);

  // Depth-first over coordinates; `remaining` is the cap left for the
  // product of the still-unassigned suffix.
  std::vector<uint64_t> lo(k);
  for (size_t i = 0; i < k; ++i) lo[i] = q.exponents[i] >= 2 ? q.t : 1;

  uint64_t nodes = 0;
  auto rec = [&](auto&& self, size_t i, uint64_t remaining) -> uint64_t {
    if (i == k) return 1;
    uint64_t sub = 0;
    for (uint64_t a = lo[i]; a <= q.n; ++a) {
      if (++nodes > node_budget)
        throw BudgetExceeded("tuple count: enumeration budget exceeded");
      uint64_t pw = 0;
      if (!detail::pow_within(a, q.exponents[i], remaining, pw))
        break;  // a^{e_i} already exceeds what is left; larger a only worse
      sub += self(self, i + 1, remaining / pw);
    }
    return sub;
  };
  res.count = rec(rec, 0, q.n);
  res.nodes = nodes;

  res.bound_holds = BigUint{res.count} * res.bound_denominator <=
                    res.bound_numerator;
  return res;
}

}  // namespace schurlab
