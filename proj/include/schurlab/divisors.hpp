#pragma once

// Divisor-count sieve, the running maximum D(n) = max_{i<=n} d(i), the slack
// factor D(n)^e, and factorisation helpers used by the greedy colouring's
// membership tests.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schurlab/bigint.hpp"

namespace schurlab {

struct DivisorTable {
  uint64_t n = 0;
  std::vector<uint32_t> d;     // d[i] = number of divisors of i, 1-based
  std::vector<uint32_t> dmax;  // dmax[m] = max_{1<=i<=m} d[i]

  uint32_t divisor_count(uint64_t i) const {
    if (i < 1 || i > n) throw std::out_of_range("DivisorTable: index outside extent");
    return d[i];
  }
  // D(m)
  uint32_t max_divisor_count(uint64_t m) const {
    if (m < 1 || m > n) throw std::out_of_range("DivisorTable: index outside extent");
    return dmax[m];
  }
};

// Classic O(n log n) sieve: every i adds one divisor to each of its multiples.
inline DivisorTable build_divisor_table(uint64_t n) {
  if (n == 0) throw std::invalid_argument("build_divisor_table: extent must be >= 1");
  DivisorTable t;
  t.n = n;
  t.d.assign(n + 1, 0);
  for (uint64_t i = 1; i <= n; ++i)
    for (uint64_t j = i; j <= n; j += i) ++t.d[j];
  t.dmax.assign(n + 1, 0);
  uint32_t running = 0;
  for (uint64_t i = 1; i <= n; ++i) {
    if (t.d[i] > running) running = t.d[i];
    t.dmax[i] = running;
  }
  return t;
}

// D(n)^exponent, exactly. The exponent is a knob (default 100); already at
// D(n) = 2 the default overflows every fixed width.
inline BigUint omega_bound(uint64_t n, const DivisorTable& table,
                           unsigned exponent = 100) {
  if (table.n < n) throw std::invalid_argument("omega_bound: table extent too small");
  return BigUint::pow(BigUint{table.max_divisor_count(n)}, exponent);
}

// Smallest-prime-factor sieve. Factorising via repeated spf lookups makes
// divisor enumeration O(d(k)) instead of O(sqrt(k)), which is what keeps the
// greedy colouring usable over 10^5..10^6 universes.
class FactorSieve {
 public:
  explicit FactorSieve(uint64_t limit) : limit_(limit), spf_(limit + 1, 0) {
    for (uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        for (uint64_t j = i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = static_cast<uint32_t>(i);
      }
    }
  }

  uint64_t limit() const { return limit_; }

  // Unsorted divisor enumeration into `out` (cleared first).
  void divisors(uint64_t k, std::vector<uint64_t>& out) const {
    out.clear();
    out.push_back(1);
    while (k > 1) {
      uint32_t p = spf_[k];
      size_t before = out.size();
      uint64_t pe = 1;
      while (k % p == 0) {
        k /= p;
        pe *= p;
        for (size_t i = 0; i < before; ++i) out.push_back(out[i] * pe);
      }
    }
  }

 private:
  uint64_t limit_;
  std::vector<uint32_t> spf_;
};

// Sorted divisors of k, through the sieve when it covers k, else by trial
// division.
inline void sorted_divisors(uint64_t k, std::vector<uint64_t>& out,
                            const FactorSieve* sieve = nullptr) {
  if (sieve != nullptr && k <= sieve->limit()) {
    sieve->divisors(k, out);
    std::sort(out.begin(), out.end());
    return;
  }
  out.clear();
  std::vector<uint64_t> high;
  for (uint64_t d = 1; d * d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      if (d != k / d) high.push_back(k / d);
    }
  }
  out.insert(out.end(), high.rbegin(), high.rend());
}

}  // namespace schurlab
