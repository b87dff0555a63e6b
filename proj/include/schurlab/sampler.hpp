#pragma once

// Reproducible binomial random subsets of [n].
//
// Stream derivation: trial `i` under seed `s` uses a std::mt19937_64 engine
// seeded with s XOR splitmix64(i). Element j (j = 1..n, in order) is included
// iff the top 53 bits of the j-th engine draw are < floor(p * 2^53). Both the
// engine and the threshold arithmetic are bit-exact across platforms, so a
// (seed, trial_index, n, p) tuple names one set forever. A further property
// this gives for free: for fixed (seed, trial_index, n) the sets are nested
// across p (common random numbers), so monotone properties stay monotone
// trial by trial.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "schurlab/integer_set.hpp"

namespace schurlab {

struct RandomSetSpec {
  uint64_t n = 0;
  double p = 0.0;  // in [0, 1]
  uint64_t seed = 0;
  uint64_t trial_index = 0;
};

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t stream_seed(uint64_t seed, uint64_t trial_index) {
  return seed ^ splitmix64(trial_index);
}

inline IntegerSet sample_binomial_set(const RandomSetSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("sample: universe must be >= 1");
  if (!(spec.p >= 0.0 && spec.p <= 1.0))
    throw std::invalid_argument("sample: p must lie in [0, 1]");
  constexpr double kTwo53 = 9007199254740992.0;  // 2^53
  const uint64_t threshold =
      spec.p >= 1.0 ? uint64_t{1} << 53
                    : static_cast<uint64_t>(spec.p * kTwo53);
  std::mt19937_64 eng(stream_seed(spec.seed, spec.trial_index));
  std::vector<uint64_t> elems;
  if (spec.p > 0.0) elems.reserve(static_cast<size_t>(spec.p * spec.n) + 16);
  for (uint64_t j = 1; j <= spec.n; ++j) {
    if ((eng() >> 11) < threshold) elems.push_back(j);
  }
  return IntegerSet::from_elements(spec.n, std::move(elems));
}

struct Probability {
  double value = 0.0;
  bool clamped = false;  // true when factor * n^exp exceeded 1
};

// factor * n^(num/den), clamped into [0, 1]. Exponents are passed as a
// rational so grid specs like n^(-1/11) stay exact in the config format.
inline Probability p_from_exponent(uint64_t n, int64_t exp_num, int64_t exp_den,
                                   double factor) {
  if (n < 1) throw std::invalid_argument("p_from_exponent: n must be >= 1");
  if (exp_den == 0) throw std::invalid_argument("p_from_exponent: zero denominator");
  if (factor <= 0.0) throw std::invalid_argument("p_from_exponent: factor must be > 0");
  const double raw = factor * std::exp2(std::log2(static_cast<double>(n)) *
                                        static_cast<double>(exp_num) /
                                        static_cast<double>(exp_den));
  if (raw > 1.0) return {1.0, true};
  return {raw, false};
}

}  // namespace schurlab
