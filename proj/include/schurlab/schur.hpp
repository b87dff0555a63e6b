#pragma once

// Exhaustive search for the largest [n] admitting an r-colouring with no
// monochromatic sum a+b=c (and, depending on mode, no shifted sum a+b=c-1),
// plus the verifier for such colourings. Sums are tuples: a = b is a sum.
//
// The search assigns 1, 2, 3, ... in order. Per colour class it keeps a
// member bitmask and a bitmask of all pairwise sums, so the legality of a
// colour for the next integer is two bit probes. Colour permutations are
// broken by only allowing a fresh colour index right after all smaller ones
// are in use; the first integer therefore always gets colour A and witnesses
// come out lexicographically minimal.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/colouring.hpp"

namespace schurlab {

enum class SumConstraintMode {
  sums,              // forbid monochromatic a + b = c
  sums_and_shifted,  // additionally forbid a + b = c - 1
  weak_shifted,      // both, except the single sum 1 + 1 = 2
};

inline std::string to_string(SumConstraintMode m) {
  switch (m) {
    case SumConstraintMode::sums: return "sums";
    case SumConstraintMode::sums_and_shifted: return "shifted";
    case SumConstraintMode::weak_shifted: return "weak";
  }
  return "?";
}

inline SumConstraintMode sum_mode_from_string(const std::string& s) {
  if (s == "sums") return SumConstraintMode::sums;
  if (s == "shifted") return SumConstraintMode::sums_and_shifted;
  if (s == "weak") return SumConstraintMode::weak_shifted;
  throw std::invalid_argument("unknown sum mode: " + s);
}

struct SumViolation {
  uint64_t a = 0, b = 0, c = 0;
  bool shifted = false;  // a + b = c - 1 rather than a + b = c
};

struct SumVerifyResult {
  bool valid = true;
  std::optional<SumViolation> violation;  // first in (a, b, sum-before-shifted) order
};

// `col` must cover exactly {1, ..., n}.
inline SumVerifyResult verify_sum_colouring(const RColouring& col,
                                            SumConstraintMode mode) {
  const uint64_t n = col.domain.size();
  for (uint64_t i = 0; i < n; ++i)
    if (col.domain[i] != i + 1)
      throw std::invalid_argument("verify_sum_colouring: domain must be {1..n}");
  auto colour = [&](uint64_t e) { return col.colours[e - 1]; };
  const bool shifted = mode != SumConstraintMode::sums;
  for (uint64_t a = 1; a <= n; ++a) {
    for (uint64_t b = a; b <= n; ++b) {
      const uint64_t c = a + b;
      if (c > n + 1) break;
      if (c <= n && colour(a) == colour(b) && colour(a) == colour(c)) {
        const bool exempt =
            mode == SumConstraintMode::weak_shifted && a == 1 && b == 1;
        if (!exempt) return {false, SumViolation{a, b, c, false}};
      }
      if (shifted && c + 1 <= n && colour(a) == colour(b) &&
          colour(a) == colour(c + 1))
        return {false, SumViolation{a, b, c + 1, true}};
    }
  }
  return {true, std::nullopt};
}

struct SchurNumberResult {
  int r = 0;
  SumConstraintMode mode = SumConstraintMode::sums;
  bool exact = false;          // search space exhausted; values are proven
  uint64_t max_colourable = 0; // largest n with a valid colouring found
  uint64_t value = 0;          // forcing number max_colourable + 1 (exact only)
  RColouring witness;          // valid colouring of [max_colourable]
  uint64_t nodes = 0;
  double seconds = 0.0;
};

namespace detail {

struct SumSearch {
  int r;
  SumConstraintMode mode;
  uint64_t node_budget;
  static constexpr int kDepthCap = 63;

  std::array<uint64_t, 8> members{};
  std::array<unsigned __int128, 8> pairsums{};
  std::vector<uint8_t> colours = std::vector<uint8_t>(kDepthCap + 2, 0);
  int best = 0;
  std::vector<uint8_t> best_colours;
  uint64_t nodes = 0;
  bool aborted = false;
  bool capped = false;

  bool forbidden(int g, int m) const {
    const auto& ps = pairsums[g - 1];
    if (!(mode == SumConstraintMode::weak_shifted && m == 2) &&
        ((ps >> m) & 1))
      return true;
    if (mode != SumConstraintMode::sums && ((ps >> (m - 1)) & 1)) return true;
    return false;
  }

  void dfs(int m, int used) {
    if (m > kDepthCap) {
      capped = true;
      return;
    }
    const int limit = used + 1 < r ? used + 1 : r;
    for (int g = 1; g <= limit; ++g) {
      if (++nodes > node_budget) {
        aborted = true;
        return;
      }
      if (forbidden(g, m)) continue;
      const auto saved = pairsums[g - 1];
      pairsums[g - 1] |= (static_cast<unsigned __int128>(members[g - 1]) << m) |
                         (static_cast<unsigned __int128>(1) << (2 * m));
      members[g - 1] |= uint64_t{1} << m;
      colours[m] = static_cast<uint8_t>(g);
      if (m > best) {
        best = m;
        best_colours.assign(colours.begin() + 1, colours.begin() + 1 + m);
      }
      dfs(m + 1, g > used ? g : used);
      members[g - 1] &= ~(uint64_t{1} << m);
      pairsums[g - 1] = saved;
      if (aborted) return;
    }
  }
};

inline SchurNumberResult run_sum_search(int r, SumConstraintMode mode,
                                        uint64_t node_budget) {
  if (r < 1 || r > 8)
    throw std::invalid_argument("sum search supports 1 <= r <= 8");
  const auto t0 = std::chrono::steady_clock::now();
  SumSearch s{r, mode, node_budget};
  s.dfs(1, 0);
  SchurNumberResult res;
  res.r = r;
  res.mode = mode;
  res.exact = !s.aborted && !s.capped;
  res.max_colourable = static_cast<uint64_t>(s.best);
  res.nodes = s.nodes;
  res.witness.r = r;
  res.witness.domain.resize(s.best);
  for (int i = 0; i < s.best; ++i) res.witness.domain[i] = i + 1;
  res.witness.colours = s.best_colours;
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return res;
}

}  // namespace detail

constexpr uint64_t kDefaultSumSearchBudget = uint64_t{40'000'000'000};

// Minimum n such that every r-colouring of [n] has a monochromatic sum.
// If the node budget runs out, `exact` is false and max_colourable is the
// largest n proven colourable so far; no forcing value is claimed.
inline SchurNumberResult schur_number(int r,
                                      SumConstraintMode mode = SumConstraintMode::sums,
                                      uint64_t node_budget = kDefaultSumSearchBudget) {
  auto res = detail::run_sum_search(r, mode, node_budget);
  if (res.exact) res.value = res.max_colourable + 1;
  return res;
}

// Minimum n forcing a monochromatic sum or shifted sum.
inline SchurNumberResult double_sum_schur_number(
    int r, uint64_t node_budget = kDefaultSumSearchBudget) {
  return schur_number(r, SumConstraintMode::sums_and_shifted, node_budget);
}

// Largest n that admits an r-colouring avoiding sums and shifted sums with
// the 1+1=2 exemption. `value` is that maximum when exact; otherwise
// max_colourable is a witnessed lower bound.
inline SchurNumberResult weak_double_sum_max(
    int r, uint64_t node_budget = kDefaultSumSearchBudget) {
  auto res = detail::run_sum_search(r, SumConstraintMode::weak_shifted, node_budget);
  if (res.exact) res.value = res.max_colourable;
  return res;
}

}  // namespace schurlab
