#pragma once

// Explicit product-Schur building blocks: the fourteen-element pattern
// generated by (a, b, c, d),
//
//   { a, b, ab, c, ac, abc, a^2bc, a^2b^2c, d, ad, bd, abd, a^2d, a^2bd }
//
// which is product-Schur for every choice with pairwise distinct values, and
// the geometric pattern U_x = {x, x^2, ..., x^L} whose product triples mirror
// sums of exponents (L = the forcing Schur number makes U_x r-product-Schur).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "schurlab/integer_set.hpp"
#include "schurlab/product_schur.hpp"

namespace schurlab {

struct PatternParams {
  uint64_t a = 0, b = 0, c = 0, d = 0;
  friend bool operator==(const PatternParams&, const PatternParams&) = default;
};

struct PatternCollision : std::invalid_argument {
  PatternCollision(const char* first_label, const char* second_label, uint64_t value)
      : std::invalid_argument(std::string("pattern collision: ") + first_label +
                              " = " + second_label + " = " + std::to_string(value)),
        first(first_label),
        second(second_label),
        value(value) {}
  const char* first;
  const char* second;
  uint64_t value;
};

struct PatternSet {
  PatternParams params;
  std::array<uint64_t, 14> values{};  // in label order below

  static const std::array<const char*, 14>& labels() {
    static const std::array<const char*, 14> l = {
        "a", "b", "ab", "c", "ac", "abc", "a2bc", "a2b2c",
        "d", "ad", "bd", "abd", "a2d", "a2bd"};
    return l;
  }

  std::vector<uint64_t> sorted_values() const {
    std::vector<uint64_t> v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    return v;
  }
};

namespace detail {

inline uint64_t checked_mul(uint64_t x, uint64_t y) {
  if (y != 0 && x > std::numeric_limits<uint64_t>::max() / y)
    throw std::overflow_error("pattern product overflows 64 bits");
  return x * y;
}

}  // namespace detail

// Builds the fourteen products and validates pairwise distinctness; a
// collision is rejected with the first colliding pair of labels.
inline PatternSet build_pattern(const PatternParams& p) {
  if (p.a < 2 || p.b < 2 || p.c < 2 || p.d < 2)
    throw std::invalid_argument("pattern generators must be >= 2");
  using detail::checked_mul;
  const uint64_t ab = checked_mul(p.a, p.b);
  const uint64_t ac = checked_mul(p.a, p.c);
  const uint64_t abc = checked_mul(ab, p.c);
  const uint64_t a2bc = checked_mul(p.a, abc);
  const uint64_t a2b2c = checked_mul(ab, abc);
  const uint64_t ad = checked_mul(p.a, p.d);
  const uint64_t bd = checked_mul(p.b, p.d);
  const uint64_t abd = checked_mul(ab, p.d);
  const uint64_t a2d = checked_mul(p.a, ad);
  const uint64_t a2bd = checked_mul(p.a, abd);
  PatternSet out;
  out.params = p;
  out.values = {p.a, p.b, ab, p.c, ac, abc, a2bc, a2b2c,
                p.d, ad, bd, abd, a2d, a2bd};
  for (size_t i = 0; i < out.values.size(); ++i)
    for (size_t j = i + 1; j < out.values.size(); ++j)
      if (out.values[i] == out.values[j])
        throw PatternCollision(PatternSet::labels()[i], PatternSet::labels()[j],
                               out.values[i]);
  return out;
}

// The pattern as a set over the smallest universe containing it.
inline IntegerSet pattern_as_set(const PatternSet& p) {
  auto vals = p.sorted_values();
  const uint64_t top = vals.back();
  return IntegerSet::from_elements(top, std::move(vals));
}

// Exhaustively confirms the pattern forces a monochromatic product under two
// colours (degenerate products allowed). True for every valid parameter
// choice; exposed as an operation so that claim stays executable.
inline bool verify_pattern_product_schur(const PatternParams& p,
                                         uint64_t node_budget = 1'000'000) {
  const auto res = is_product_schur(pattern_as_set(build_pattern(p)), 2,
                                    /*allow_degenerate=*/true, node_budget);
  if (res.outcome == DecisionOutcome::unknown)
    throw std::runtime_error("pattern verification ran out of budget");
  return res.outcome == DecisionOutcome::product_schur;
}

struct PowerPattern {
  uint64_t base = 0;
  std::vector<uint64_t> values;  // x, x^2, ..., x^length
  int length() const { return static_cast<int>(values.size()); }
};

// U_x of the given length inside [universe]; throws if x^length overflows or
// leaves the universe.
inline PowerPattern build_power_pattern(uint64_t x, int length, uint64_t universe) {
  if (x < 2) throw std::invalid_argument("power pattern base must be >= 2");
  if (length < 1) throw std::invalid_argument("power pattern length must be >= 1");
  PowerPattern out;
  out.base = x;
  uint64_t cur = 1;
  for (int i = 0; i < length; ++i) {
    if (cur > universe / x)
      throw std::overflow_error("power pattern leaves the universe");
    cur *= x;
    out.values.push_back(cur);
  }
  return out;
}

// floor(n^(1/length) / length^2): the guaranteed size of the greedy family.
inline uint64_t power_family_size_bound(uint64_t n, int length) {
  uint64_t x = 1;
  while (true) {
    uint64_t pw = 1;
    bool over = false;
    for (int i = 0; i < length; ++i) {
      if (pw > n / (x + 1)) { over = true; break; }
      pw *= (x + 1);
    }
    if (over || pw > n) break;
    ++x;
  }
  return x / (static_cast<uint64_t>(length) * length);
}

// Iterate x = 2, 3, ... while x^length <= n, keeping U_x iff it is disjoint
// from every pattern kept so far. The result is pairwise disjoint and at
// least as large as power_family_size_bound(n, length).
inline std::vector<PowerPattern> greedy_disjoint_power_family(uint64_t n,
                                                              int length) {
  std::vector<PowerPattern> family;
  std::unordered_set<uint64_t> taken;
  for (uint64_t x = 2;; ++x) {
    uint64_t pw = 1;
    bool over = false;
    for (int i = 0; i < length; ++i) {
      if (pw > n / x) { over = true; break; }
      pw *= x;
    }
    if (over) break;
    PowerPattern cand = build_power_pattern(x, length, n);
    bool disjoint = true;
    for (uint64_t v : cand.values)
      if (taken.count(v)) { disjoint = false; break; }
    if (!disjoint) continue;
    for (uint64_t v : cand.values) taken.insert(v);
    family.push_back(std::move(cand));
  }
  return family;
}

}  // namespace schurlab
