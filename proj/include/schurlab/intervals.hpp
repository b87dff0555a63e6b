#pragma once

// Two interval constructions.
//
// 1. The fourteen-interval plan used to search for the fourteen-element
//    pattern: generator windows A, B, C, D and the product windows, all with
//    endpoints of the form (1 - m*delta) * n^(e/11) / div. Real endpoints are
//    made exact integers (ceilings below, floors above) and disjointness is
//    re-verified after rounding. All root comparisons are settled in exact
//    big-integer arithmetic, never in floating point.
//
// 2. The exponent-interval colouring: split (n^(1/q), n] into
//    I_i = (n^(i/q), n^((i+1)/q)] where q is the double-sum forcing number
//    for r colours, and colour I_i by a colouring of [q-1] avoiding sums and
//    shifted sums. Since a in I_alpha, b in I_beta forces ab into
//    I_{alpha+beta} or I_{alpha+beta+1}, the result has no monochromatic
//    product among elements above n^(1/q).

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/bigint.hpp"
#include "schurlab/integer_set.hpp"
#include "schurlab/patterns.hpp"
#include "schurlab/schur.hpp"

namespace schurlab {

struct Rational {
  uint64_t num = 0;
  uint64_t den = 1;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Accepts "0.001", "1e-3", "1/1000" and plain integers; exact decimal parse.
inline Rational parse_decimal_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    return {std::stoull(text.substr(0, slash)), std::stoull(text.substr(slash + 1))};
  }
  std::string mantissa = text;
  int64_t exp10 = 0;
  const auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    exp10 = std::stoll(text.substr(epos + 1));
  }
  uint64_t num = 0;
  int64_t frac_digits = 0;
  bool seen_dot = false;
  for (char ch : mantissa) {
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational: " + text);
      seen_dot = true;
      continue;
    }
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad rational: " + text);
    num = num * 10 + static_cast<uint64_t>(ch - '0');
    if (seen_dot) ++frac_digits;
  }
  int64_t shift = exp10 - frac_digits;
  uint64_t den = 1;
  while (shift > 0) { num *= 10; --shift; }
  while (shift < 0) { den *= 10; ++shift; }
  return {num, den};
}

namespace detail {

// floor(n^(e/k)) via long double seed corrected against exact powers.
inline uint64_t floor_root_pow(uint64_t n, unsigned e, unsigned k) {
  const BigUint target = BigUint::pow(BigUint{n}, e);
  long double seed = powl(static_cast<long double>(n),
                          static_cast<long double>(e) / static_cast<long double>(k));
  uint64_t m = seed < 1.0L ? 1 : static_cast<uint64_t>(seed);
  while (BigUint::pow(BigUint{m + 1}, k) <= target) ++m;
  while (m > 0 && BigUint::pow(BigUint{m}, k) > target) --m;
  return m;
}

// ceil(K * n^(e/k) / M): smallest L with (L*M)^k >= K^k * n^e.
inline uint64_t ceil_scaled_root(uint64_t K, uint64_t M, uint64_t n, unsigned e,
                                 unsigned k) {
  if (K == 0) return 0;
  const BigUint target = BigUint::pow(BigUint{K}, k) * BigUint::pow(BigUint{n}, e);
  long double seed = static_cast<long double>(K) / static_cast<long double>(M) *
                     powl(static_cast<long double>(n),
                          static_cast<long double>(e) / static_cast<long double>(k));
  uint64_t L = seed < 1.0L ? 1 : static_cast<uint64_t>(seed);
  auto ge = [&](uint64_t cand) {
    return BigUint::pow(BigUint{cand} * BigUint{M}, k) >= target;
  };
  while (!ge(L)) ++L;
  while (L > 1 && ge(L - 1)) --L;
  return L;
}

}  // namespace detail

struct Interval {
  std::string label;
  uint64_t lo = 1, hi = 0;  // inclusive; lo > hi means empty
  bool contains(uint64_t x) const { return lo <= x && x <= hi; }
  bool empty() const { return lo > hi; }
};

struct IntervalPlanError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntervalPlan {
  uint64_t n = 0;
  Rational delta;
  // order: A, B, I_ab, C, I_ac, I_abc, I_a2bc, I_a2b2c, D, I_ad, I_bd,
  //        I_abd, I_a2d, I_a2bd
  std::array<Interval, 14> intervals;

  const Interval& a() const { return intervals[0]; }
  const Interval& b() const { return intervals[1]; }
  const Interval& c() const { return intervals[3]; }
  const Interval& d() const { return intervals[8]; }
  const Interval& by_label(const std::string& label) const {
    for (const auto& iv : intervals)
      if (iv.label == label) return iv;
    throw std::out_of_range("no interval labelled " + label);
  }
};

namespace detail {

struct IntervalSpec {
  const char* label;
  unsigned delta_multiplier;  // m in (1 - m*delta)
  unsigned exponent;          // e in n^(e/11)
  unsigned divisor;
};

inline const std::array<IntervalSpec, 14>& interval_specs() {
  static const std::array<IntervalSpec, 14> specs = {{
      {"A", 1, 1, 1},
      {"B", 1, 2, 2},
      {"I_ab", 2, 3, 2},
      {"C", 1, 5, 1},
      {"I_ac", 2, 6, 1},
      {"I_abc", 3, 8, 2},
      {"I_a2bc", 4, 9, 2},
      {"I_a2b2c", 5, 11, 4},
      {"D", 1, 7, 3},
      {"I_ad", 2, 8, 3},
      {"I_bd", 2, 9, 6},
      {"I_abd", 3, 10, 6},
      {"I_a2d", 3, 9, 3},
      {"I_a2bd", 4, 11, 6},
  }};
  return specs;
}

}  // namespace detail

// Smallest n from which the plan is valid for every larger universe: each
// real interval is wide enough to contain an integer and the real intervals
// are separated. Far beyond 64 bits for small delta, hence a big integer.
// Individual smaller universes can still be admissible when the endpoints
// happen to align (make_interval_plan checks the given n exactly).
inline BigUint interval_plan_min_universal_n(const Rational& delta) {
  if (delta.num == 0 || delta.num >= delta.den)
    throw std::invalid_argument("delta must lie in (0, 1)");
  // The same-exponent pairs (e.g. the two intervals at n^(9/11)/3 and
  // n^(9/11)/2) separate only when delta < 1/15, independently of n.
  if (15 * delta.num >= delta.den)
    throw std::invalid_argument("no universe admits the plan: need delta < 1/15");
  BigUint best{1};
  auto consider = [&](const BigUint& cand) {
    if (best < cand) best = cand;
  };
  // width >= 1: m * delta * n^(e/11) / div >= 1, i.e. n^e >= (div*dd/(m*dn))^11
  for (const auto& sp : detail::interval_specs()) {
    uint64_t ratio = sp.divisor * delta.den / (sp.delta_multiplier * delta.num);
    consider(BigUint::pow(BigUint{ratio + 1}, 11));  // conservative ceiling
  }
  // separation between consecutive exponent levels: the binding constraints
  // all have the form n^(1/11) > q with q <= 4/(1 - 5*delta).
  const uint64_t q = 4 * delta.den / (delta.den - 5 * delta.num) + 1;
  consider(BigUint::pow(BigUint{q}, 11));
  return best;
}

// Builds the plan at a concrete n with exact integer endpoints; throws
// IntervalPlanError naming the empty interval or the overlapping pair.
inline IntervalPlan make_interval_plan(uint64_t n, Rational delta) {
  if (delta.num == 0 || delta.num >= delta.den)
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("universe too small for any plan");

  IntervalPlan plan;
  plan.n = n;
  plan.delta = delta;
  for (size_t i = 0; i < detail::interval_specs().size(); ++i) {
    const auto& sp = detail::interval_specs()[i];
    Interval iv;
    iv.label = sp.label;
    iv.hi = detail::floor_root_pow(n, sp.exponent, 11) / sp.divisor;
    if (sp.delta_multiplier * delta.num >= delta.den) {
      iv.lo = 1;  // (1 - m*delta) <= 0: degenerate, reported as empty below
      iv.hi = 0;
    } else {
      iv.lo = detail::ceil_scaled_root(delta.den - sp.delta_multiplier * delta.num,
                                       delta.den * sp.divisor, n, sp.exponent, 11);
    }
    plan.intervals[i] = iv;
  }

  std::string hint;
  if (15 * delta.num < delta.den)
    hint = " (always admissible from n >= " +
           interval_plan_min_universal_n(delta).to_string() + ")";
  else
    hint = " (no universe is admissible at this delta)";
  for (const auto& iv : plan.intervals)
    if (iv.empty())
      throw IntervalPlanError("interval " + iv.label +
                              " contains no integer at n=" + std::to_string(n) +
                              hint);

  auto sorted = plan.intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& l, const Interval& r) { return l.lo < r.lo; });
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i + 1].lo <= sorted[i].hi)
      throw IntervalPlanError("intervals " + sorted[i].label + " and " +
                              sorted[i + 1].label + " overlap at n=" +
                              std::to_string(n));
  return plan;
}

// Staged scan for pattern generators inside a set: a from A, then b from B
// with ab present, then c from C with ac, abc, a^2bc, a^2b^2c present, then
// d from D with ad, bd, abd, a^2d, a^2bd present. Each stage scans its
// interval in increasing order and backtracks across stages, so a pattern is
// found exactly when one exists with generators in the designated intervals;
// the one with smallest (a, b, c, d) is returned.
inline std::optional<PatternParams> find_pattern(const IntegerSet& s,
                                                 const IntervalPlan& plan) {
  const auto& elems = s.elements();
  auto in_range = [&](const Interval& iv, size_t idx) {
    return idx < elems.size() && elems[idx] <= iv.hi;
  };
  auto has = [&](u128 v) {
    return v <= s.universe() && s.contains(static_cast<uint64_t>(v));
  };

  for (size_t ia = s.first_at_least(plan.a().lo); in_range(plan.a(), ia); ++ia) {
    const uint64_t a = elems[ia];
    for (size_t ib = s.first_at_least(plan.b().lo); in_range(plan.b(), ib); ++ib) {
      const uint64_t b = elems[ib];
      if (!has(u128(a) * b)) continue;
      for (size_t ic = s.first_at_least(plan.c().lo); in_range(plan.c(), ic); ++ic) {
        const uint64_t c = elems[ic];
        if (!has(u128(a) * c) || !has(u128(a) * b * c) ||
            !has(u128(a) * a * b * c) || !has(u128(a) * a * b * b * c))
          continue;
        for (size_t id = s.first_at_least(plan.d().lo); in_range(plan.d(), id); ++id) {
          const uint64_t d = elems[id];
          if (!has(u128(a) * d) || !has(u128(b) * d) || !has(u128(a) * b * d) ||
              !has(u128(a) * a * d) || !has(u128(a) * a * b * d))
            continue;
          PatternParams params{a, b, c, d};
          try {
            build_pattern(params);  // pairwise distinctness
          } catch (const std::invalid_argument&) {
            continue;
          } catch (const std::overflow_error&) {
            continue;
          }
          return params;
        }
      }
    }
  }
  return std::nullopt;
}

// -------- exponent-interval colouring --------

struct IntervalColouringPlan {
  uint64_t n = 0;
  int r = 0;
  uint64_t sprime = 0;              // double-sum forcing number for r colours
  RColouring psi;                   // colouring of [sprime - 1], sums+shifted free
  std::vector<uint64_t> boundaries; // boundaries[i] = floor(n^(i/sprime)), i = 0..sprime

  // i such that boundaries[i] < e <= boundaries[i+1]; 0 for e <= boundaries[1].
  int interval_index_of(uint64_t e) const {
    if (e <= boundaries[1]) return 0;
    int lo = 1, hi = static_cast<int>(sprime) - 1;
    while (lo < hi) {
      const int mid = (lo + hi + 1) / 2;
      if (e > boundaries[mid]) lo = mid;
      else hi = mid - 1;
    }
    return lo;
  }
};

inline IntervalColouringPlan build_interval_colouring(
    uint64_t n, int r, uint64_t node_budget = kDefaultSumSearchBudget) {
  if (n < 2) throw std::invalid_argument("interval colouring: n must be >= 2");
  auto sr = double_sum_schur_number(r, node_budget);
  if (!sr.exact)
    throw std::runtime_error("interval colouring: forcing number search exceeded budget");
  IntervalColouringPlan plan;
  plan.n = n;
  plan.r = r;
  plan.sprime = sr.value;
  plan.psi = sr.witness;  // lex-first colouring of [sprime-1]
  plan.boundaries.resize(plan.sprime + 1);
  for (uint64_t i = 0; i <= plan.sprime; ++i)
    plan.boundaries[i] =
        detail::floor_root_pow(n, static_cast<unsigned>(i),
                               static_cast<unsigned>(plan.sprime));
  return plan;
}

struct IntervalColouringOutcome {
  RColouring colouring;              // over the colourable elements
  std::vector<uint64_t> uncolourable; // elements <= n^(1/sprime)
};

inline IntervalColouringOutcome colour_set_by_intervals(
    const IntegerSet& s, const IntervalColouringPlan& plan) {
  if (s.max_element() > plan.n)
    throw std::invalid_argument("interval colouring: set exceeds plan universe");
  IntervalColouringOutcome out;
  out.colouring.r = plan.r;
  for (uint64_t e : s.elements()) {
    const int idx = plan.interval_index_of(e);
    if (idx == 0) {
      out.uncolourable.push_back(e);
      continue;
    }
    out.colouring.domain.push_back(e);
    out.colouring.colours.push_back(plan.psi.colours[idx - 1]);
  }
  return out;
}

}  // namespace schurlab
