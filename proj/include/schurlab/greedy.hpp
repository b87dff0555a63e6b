#pragma once

// The two-colour greedy: process elements in increasing order, put k into the
// first class R unless k is a product of two or three current R members, else
// into B unless k is a product of two current B members, else fail. Success
// certifies the set is not product-Schur (both classes end up product-free).
//
// A failure at k carries two witnesses: a B-pair (a, b) with ab = k and an
// R-tuple (d, e, f) with def = k, f possibly 1. From them (and the final R
// class) a twelve-entry failure certificate (a,b,c,d,e,f,x,y,z,u,v,w) is
// extracted: c = ab = def, a = xyz and b = uvw with x,y,u,v in R and z,w in
// R or 1. Its defining conditions are validated by
// check_forbidden_configuration.
//
// Membership tests walk divisor pairs (d1, k/d1) of k, and divisor pairs of
// k/d1 for the triple test, against the current classes; product sets are
// never materialised.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "schurlab/divisors.hpp"
#include "schurlab/integer_set.hpp"

namespace schurlab {

using u128 = unsigned __int128;

struct TwoColouring {
  IntegerSet r_class;  // preferred class
  IntegerSet b_class;  // fallback class
};

struct GreedyWitnesses {
  std::array<uint64_t, 2> blue_pair{};  // a * b = k, both in B, a <= b
  std::array<uint64_t, 3> red_tuple{};  // d * e * f = k, d, e in R, f in R or 1
};

struct GreedyOutcome {
  bool success = false;
  TwoColouring colouring;  // partial on failure: elements before the failed one
  std::optional<uint64_t> failed_element;
  std::optional<GreedyWitnesses> witnesses;
};

namespace detail {

// Growing membership structure for one colour class: dense bits when the
// element range allows, hash set otherwise.
class ClassMembers {
 public:
  ClassMembers(uint64_t top, bool dense) : dense_(dense) {
    if (dense_) bits_.assign((top >> 6) + 1, 0);
  }
  bool contains(uint64_t x) const {
    if (dense_) return (bits_[x >> 6] >> (x & 63)) & 1u;
    return hash_.count(x) != 0;
  }
  void insert(uint64_t x) {
    if (dense_)
      bits_[x >> 6] |= uint64_t{1} << (x & 63);
    else
      hash_.insert(x);
    elems_.push_back(x);
  }
  const std::vector<uint64_t>& elements() const { return elems_; }

 private:
  bool dense_;
  std::vector<uint64_t> bits_;
  std::unordered_set<uint64_t> hash_;
  std::vector<uint64_t> elems_;
};

// Smallest divisor pair (d1 <= d2) of k with both parts in `cls`. `divs`
// must hold the sorted divisors of k.
inline std::optional<std::array<uint64_t, 2>> class_pair(
    const ClassMembers& cls, uint64_t k, const std::vector<uint64_t>& divs) {
  for (uint64_t d : divs) {
    if (u128(d) * d > k) break;
    if (cls.contains(d) && cls.contains(k / d))
      return std::array<uint64_t, 2>{d, k / d};
  }
  return std::nullopt;
}

// Smallest triple d1 <= d2 <= d3 with product k, all in `cls`.
inline std::optional<std::array<uint64_t, 3>> class_triple(
    const ClassMembers& cls, uint64_t k, const std::vector<uint64_t>& divs,
    const FactorSieve* sieve, std::vector<uint64_t>& inner) {
  for (uint64_t d1 : divs) {
    if (u128(d1) * d1 * d1 > k) break;
    if (!cls.contains(d1)) continue;
    const uint64_t rest = k / d1;
    sorted_divisors(rest, inner, sieve);
    for (uint64_t d2 : inner) {
      if (d2 < d1) continue;
      if (u128(d2) * d2 > rest) break;
      if (cls.contains(d2) && cls.contains(rest / d2))
        return std::array<uint64_t, 3>{d1, d2, rest / d2};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Runs the greedy colouring. Failure is a value, not an error; 1 in S is
// allowed (it lands in R first). A sieve covering max(s) speeds up the
// divisor walks; without one trial division is used.
inline GreedyOutcome greedy_two_colour(const IntegerSet& s,
                                       const FactorSieve* sieve = nullptr) {
  const uint64_t top = std::max<uint64_t>(s.max_element(), 1);
  const bool dense = top <= IntegerSet::kDenseBitLimit;
  detail::ClassMembers red(top, dense), blue(top, dense);
  std::vector<uint64_t> divs, inner;

  GreedyOutcome out;
  for (uint64_t k : s.elements()) {
    sorted_divisors(k, divs, sieve);
    auto rr = detail::class_pair(red, k, divs);
    std::optional<std::array<uint64_t, 3>> rrr;
    if (!rr) rrr = detail::class_triple(red, k, divs, sieve, inner);
    if (!rr && !rrr) {
      red.insert(k);
      continue;
    }
    const auto bb = detail::class_pair(blue, k, divs);
    if (!bb) {
      blue.insert(k);
      continue;
    }
    out.success = false;
    out.failed_element = k;
    GreedyWitnesses w;
    w.blue_pair = *bb;
    w.red_tuple = rr ? std::array<uint64_t, 3>{(*rr)[0], (*rr)[1], 1} : *rrr;
    out.witnesses = w;
    out.colouring.r_class = IntegerSet::from_elements(s.universe(), red.elements());
    out.colouring.b_class = IntegerSet::from_elements(s.universe(), blue.elements());
    return out;
  }
  out.success = true;
  out.colouring.r_class = IntegerSet::from_elements(s.universe(), red.elements());
  out.colouring.b_class = IntegerSet::from_elements(s.universe(), blue.elements());
  return out;
}

struct ForbiddenConfiguration {
  uint64_t a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
  uint64_t x = 0, y = 0, z = 0, u = 0, v = 0, w = 0;

  std::array<uint64_t, 12> as_array() const {
    return {a, b, c, d, e, f, x, y, z, u, v, w};
  }
  static const std::array<const char*, 12>& entry_names() {
    static const std::array<const char*, 12> names = {
        "a", "b", "c", "d", "e", "f", "x", "y", "z", "u", "v", "w"};
    return names;
  }
};

// Number of distinct entries different from 1.
inline int effective_size(const ForbiddenConfiguration& cfg) {
  auto arr = cfg.as_array();
  std::sort(arr.begin(), arr.end());
  int count = 0;
  for (size_t i = 0; i < arr.size(); ++i)
    if (arr[i] != 1 && (i == 0 || arr[i] != arr[i - 1])) ++count;
  return count;
}

struct ConfigCheckResult {
  bool valid = true;
  std::vector<std::string> violations;
};

// Validates the four defining conditions of a failure certificate against a
// set: (i) the product equalities, (ii) membership (f, z, w may be 1),
// (iii) a and b distinct from the other ten entries, (iv) with
// A = {x,y,z,d,e,f,u,v,w} \ {1}, A is disjoint from A*A and from A*A*A.
inline ConfigCheckResult check_forbidden_configuration(
    const ForbiddenConfiguration& cfg, const IntegerSet& s) {
  ConfigCheckResult res;
  auto fail = [&](const std::string& msg) {
    res.valid = false;
    res.violations.push_back(msg);
  };
  for (uint64_t entry : cfg.as_array())
    if (entry == 0) {
      fail("entries must be positive");
      return res;
    }

  if (u128(cfg.a) * cfg.b != cfg.c) fail("(i): c != a*b");
  if (u128(cfg.d) * cfg.e * cfg.f != cfg.c) fail("(i): c != d*e*f");
  if (u128(cfg.x) * cfg.y * cfg.z != cfg.a) fail("(i): a != x*y*z");
  if (u128(cfg.u) * cfg.v * cfg.w != cfg.b) fail("(i): b != u*v*w");

  const std::array<std::pair<const char*, uint64_t>, 9> strict = {{
      {"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}, {"d", cfg.d}, {"e", cfg.e},
      {"x", cfg.x}, {"y", cfg.y}, {"u", cfg.u}, {"v", cfg.v}}};
  for (auto [name, val] : strict)
    if (!s.contains(val)) fail(std::string("(ii): ") + name + " not in S");
  const std::array<std::pair<const char*, uint64_t>, 3> loose = {{
      {"f", cfg.f}, {"z", cfg.z}, {"w", cfg.w}}};
  for (auto [name, val] : loose)
    if (val != 1 && !s.contains(val))
      fail(std::string("(ii): ") + name + " not in S or 1");

  const std::array<std::pair<const char*, uint64_t>, 10> others = {{
      {"c", cfg.c}, {"d", cfg.d}, {"e", cfg.e}, {"f", cfg.f}, {"x", cfg.x},
      {"y", cfg.y}, {"z", cfg.z}, {"u", cfg.u}, {"v", cfg.v}, {"w", cfg.w}}};
  for (auto [name, val] : others) {
    if (cfg.a == val) fail(std::string("(iii): a equals ") + name);
    if (cfg.b == val) fail(std::string("(iii): b equals ") + name);
  }

  std::set<uint64_t> a_set;
  for (uint64_t val : {cfg.x, cfg.y, cfg.z, cfg.d, cfg.e, cfg.f, cfg.u, cfg.v, cfg.w})
    if (val != 1) a_set.insert(val);
  std::set<u128> aa;
  for (uint64_t p : a_set)
    for (uint64_t q : a_set) aa.insert(u128(p) * q);
  for (uint64_t p : a_set)
    if (aa.count(p)) {
      fail("(iv): A meets A*A at " + std::to_string(p));
      break;
    }
  constexpr u128 kMax64 = std::numeric_limits<uint64_t>::max();
  bool aaa_hit = false;
  for (u128 pq : aa) {
    if (pq > kMax64) continue;  // a further factor cannot land back in A
    for (uint64_t t : a_set) {
      const u128 pqr = pq * t;
      if (pqr <= kMax64 && a_set.count(static_cast<uint64_t>(pqr))) {
        fail("(iv): A meets A*A*A at " +
             std::to_string(static_cast<uint64_t>(pqr)));
        aaa_hit = true;
        break;
      }
    }
    if (aaa_hit) break;
  }
  return res;
}

// Rebuilds the certificate from a greedy failure: the blue pair gives (a, b),
// the red tuple gives (d, e, f), and a, b are refactored over the final R
// class. When several factorisations exist the lexicographically smallest
// (x <= y, then z) is taken. Requires 1 not in S; witnesses must really come
// from the outcome's classes.
inline ForbiddenConfiguration extract_forbidden_configuration(
    const GreedyOutcome& outcome, const IntegerSet& s,
    const FactorSieve* sieve = nullptr) {
  if (outcome.success)
    throw std::invalid_argument("extract: outcome is a success, nothing to extract");
  if (s.contains(1))
    throw std::invalid_argument("extract: requires 1 not in S");
  if (!outcome.failed_element || !outcome.witnesses)
    throw std::invalid_argument("extract: failure lacks witnesses");

  const uint64_t k = *outcome.failed_element;
  const auto& wit = *outcome.witnesses;
  const IntegerSet& red = outcome.colouring.r_class;
  const IntegerSet& blue = outcome.colouring.b_class;

  if (u128(wit.blue_pair[0]) * wit.blue_pair[1] != k ||
      !blue.contains(wit.blue_pair[0]) || !blue.contains(wit.blue_pair[1]))
    throw std::invalid_argument("extract: blue witness is not a B-pair for k");
  if (u128(wit.red_tuple[0]) * wit.red_tuple[1] * wit.red_tuple[2] != k ||
      !red.contains(wit.red_tuple[0]) || !red.contains(wit.red_tuple[1]) ||
      (wit.red_tuple[2] != 1 && !red.contains(wit.red_tuple[2])))
    throw std::invalid_argument("extract: red witness is not an R-tuple for k");

  // All factorisations of m into two or three R members, two-factor form as
  // (x, y, 1); lexicographic minimum wins.
  auto refactor = [&](uint64_t m) -> std::array<uint64_t, 3> {
    std::array<uint64_t, 3> bestf{};
    bool found = false;
    auto consider = [&](std::array<uint64_t, 3> cand) {
      if (!found || cand < bestf) {
        bestf = cand;
        found = true;
      }
    };
    std::vector<uint64_t> divs, inner;
    sorted_divisors(m, divs, sieve);
    for (uint64_t d1 : divs) {
      if (u128(d1) * d1 > m) break;
      if (red.contains(d1) && red.contains(m / d1)) consider({d1, m / d1, 1});
    }
    for (uint64_t d1 : divs) {
      if (u128(d1) * d1 * d1 > m) break;
      if (!red.contains(d1)) continue;
      const uint64_t rest = m / d1;
      sorted_divisors(rest, inner, sieve);
      for (uint64_t d2 : inner) {
        if (d2 < d1) continue;
        if (u128(d2) * d2 > rest) break;
        if (red.contains(d2) && red.contains(rest / d2))
          consider({d1, d2, rest / d2});
      }
    }
    if (!found)
      throw std::invalid_argument(
          "extract: witness element has no factorisation over R");
    return bestf;
  };

  const auto xyz = refactor(wit.blue_pair[0]);
  const auto uvw = refactor(wit.blue_pair[1]);

  ForbiddenConfiguration cfg;
  cfg.a = wit.blue_pair[0];
  cfg.b = wit.blue_pair[1];
  cfg.c = k;
  cfg.d = wit.red_tuple[0];
  cfg.e = wit.red_tuple[1];
  cfg.f = wit.red_tuple[2];
  cfg.x = xyz[0];
  cfg.y = xyz[1];
  cfg.z = xyz[2];
  cfg.u = uvw[0];
  cfg.v = uvw[1];
  cfg.w = uvw[2];

  auto check = check_forbidden_configuration(cfg, s);
  if (!check.valid)
    throw std::logic_error("extract: rebuilt configuration fails validation: " +
                           check.violations.front());
  return cfg;
}

}  // namespace schurlab
